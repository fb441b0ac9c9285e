#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lendkit {

// Thrown when an exhaustive search or construction exceeds its budget.
// Callers that want "skip, not fail" semantics catch this explicitly.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unknown ids, duplicate ids, schema violations.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition of an engine operation does not hold (e.g. a wedge that
// fails the wedge axioms was passed to a factorization).
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

constexpr long long kDefaultBudget = 1000000;

// Counts enumeration candidates and synthesized cells. Every exhaustive
// operation threads one of these; hitting the limit throws rather than
// running unbounded.
class Budget {
 public:
  Budget() : limit_(kDefaultBudget) {}
  explicit Budget(long long limit) : limit_(limit) {}

  void charge(long long n, const char* site) {
    used_ += n;
    if (used_ > limit_) {
      throw BudgetExceeded(std::string("budget exceeded (") + site + "): used " +
                           std::to_string(used_) + " of " + std::to_string(limit_));
    }
  }
  long long used() const { return used_; }
  long long limit() const { return limit_; }

 private:
  long long limit_;
  long long used_ = 0;
};

struct ValidationReport {
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
  void add(std::string p) { problems.push_back(std::move(p)); }
  std::string joined() const {
    std::string out;
    for (const auto& p : problems) {
      out += p;
      out += '\n';
    }
    return out;
  }
};

// --- canonical id building -------------------------------------------------
//
// Synthesized cells (pairs, tuples, functors-as-objects, wedge families) get
// ids assembled from their component ids. Components are escaped so the
// delimiters below never collide with user-supplied ids.

std::string escape_id(std::string_view raw);

// "(a,b,...)" tuples; used for products and indexed pairs.
std::string tuple_id(const std::vector<std::string>& parts);
std::string pair_id(std::string_view a, std::string_view b);

// "(src>dst;payload)" for morphisms that need explicit endpoints
// (slices, inserters, Grothendieck totals).
std::string arrow_id(std::string_view src, std::string_view dst, std::string_view payload);

// "[m1,m2,...]" functor-as-object (morphism images in domain order).
std::string bracket_id(const std::vector<std::string>& parts);

// "[c1,..|src>dst]" natural-transformation-as-morphism.
std::string nt_id(const std::vector<std::string>& comps, std::string_view src, std::string_view dst);

// "{A:xA,..|f:xf,..}" wedge family; "{A:gA,..|src>dst}" family morphism.
std::string family_id(const std::vector<std::pair<std::string, std::string>>& objPart,
                      const std::vector<std::pair<std::string, std::string>>& onePart);
std::string family_mor_id(const std::vector<std::pair<std::string, std::string>>& comps,
                          std::string_view src, std::string_view dst);

}  // namespace lendkit
