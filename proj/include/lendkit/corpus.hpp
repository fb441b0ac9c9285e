#pragma once

#include <random>

#include "lendkit/laxtrans.hpp"

namespace lendkit {

struct CorpusDiagram {
  std::string name;
  DiagPtr diagram;  // op-first over the entry shape
};

struct CorpusPair {
  std::string name;
  DiagPtr weight, diagram;  // covariant over the entry shape
};

struct CorpusEntry {
  std::string name;
  TwoCatPtr shape;
  std::vector<CorpusDiagram> squares;
  std::vector<CorpusPair> covariantPairs;
};

struct Corpus {
  uint64_t seed = 0;
  std::vector<CorpusEntry> entries;
};

// Deterministic given the seed. Always contains the fixed fixture shapes
// (terminal, arrow, discrete pair, parallel pair, commuting square, and one
// genuinely 2-categorical shape); random diagrams target small categories,
// smaller still on the larger shapes so downstream constructions stay finite
// in practice.
Corpus generate_corpus(uint64_t seed, int sizeBudget, Budget& budget);

// Random covariant diagram over a shape: values drawn from a palette, 1-cell
// images found by seeded backtracking, rejection when none exists.
std::optional<TwoFunctorToCat> random_covariant_diagram(const TwoCatPtr& shape,
                                                        const std::vector<CatPtr>& palette,
                                                        std::mt19937_64& rng, Budget& budget);

// hom(-, obj) as a covariant diagram over the opposite shape.
TwoFunctorToCat representable_presheaf(const CatPtr& a, const std::string& objId, Budget& budget);

}  // namespace lendkit
