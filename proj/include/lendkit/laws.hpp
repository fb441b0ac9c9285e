#pragma once

#include "lendkit/corpus.hpp"

namespace lendkit {

struct LawResult {
  std::string lawId;
  int instances = 0;  // run = passes + failures (skips not counted as run)
  int passes = 0;
  std::vector<std::string> failures;  // replayable serialized instances
  int skipped = 0;                    // budget-exceeded instances
  long long wallMs = 0;
};

const std::vector<std::string>& law_ids();

// Runs the registered laws (all of them when filter is empty). Each instance
// gets a fresh budget; exceeding it records a skip, never a silent pass.
std::vector<LawResult> run_laws(const Corpus& corpus, const std::vector<std::string>& filter,
                                long long perInstanceBudget);

std::string law_table(const std::vector<LawResult>& results);

}  // namespace lendkit
