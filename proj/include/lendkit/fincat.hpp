#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lendkit/base.hpp"

namespace lendkit {

struct Mor {
  std::string id;
  int32_t src = -1;
  int32_t dst = -1;
};

// Composition table over morphism indices. Dense matrix for small categories,
// hash map for the big synthesized products where n*n would not fit.
class ComposeTable {
 public:
  ComposeTable() = default;
  ComposeTable(int n, long long definedPairsHint);

  void set(int g, int f, int gf);
  int get(int g, int f) const;
  long long definedPairs() const { return defined_; }
  bool operator==(const ComposeTable& o) const;

 private:
  int n_ = 0;
  bool dense_ = true;
  long long defined_ = 0;
  std::vector<int32_t> mat_;
  std::unordered_map<int64_t, int32_t> map_;
};

// A finite category as a total composition table. Object and morphism lists
// are kept sorted by id (canonical form); all engine constructions emit this
// form, which is what makes outputs byte-deterministic.
class FinCat {
 public:
  FinCat() = default;

  int numObjects() const { return static_cast<int>(objects_.size()); }
  int numMors() const { return static_cast<int>(mors_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Mor>& mors() const { return mors_; }
  const std::string& objectId(int o) const { return objects_[o]; }
  const Mor& mor(int m) const { return mors_[m]; }

  int objIndex(const std::string& id) const;
  int morIndex(const std::string& id) const;
  int objIndexChecked(const std::string& id) const;
  int morIndexChecked(const std::string& id) const;

  int identity(int obj) const { return identity_[obj]; }
  bool isIdentity(int m) const { return identity_[mors_[m].src] == m; }

  // g after f; -1 when not composable.
  int compose(int g, int f) const { return comp_.get(g, f); }

  // Ascending morphism indices x -> y; empty vector reference when none.
  const std::vector<int32_t>& hom(int x, int y) const;

  // Morphisms m with an explicit two-sided inverse.
  bool isInvertible(int m) const;
  int inverseOf(int m) const;  // -1 if none

  bool operator==(const FinCat& o) const;
  bool operator!=(const FinCat& o) const { return !(*this == o); }

  friend class FinCatBuilder;

 private:
  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<int32_t> identity_;
  ComposeTable comp_;
  std::unordered_map<std::string, int32_t> objIdx_;
  std::unordered_map<std::string, int32_t> morIdx_;
  std::unordered_map<int64_t, std::vector<int32_t>> hom_;
};

using CatPtr = std::shared_ptr<const FinCat>;

// Assembles a FinCat, sorting cells into canonical order and resolving id
// references. Structural problems (duplicate/unknown ids, identity or
// composite endpoints that cannot exist) throw InputError; the categorical
// laws themselves are checked separately by validate_fin_cat.
class FinCatBuilder {
 public:
  void addObject(std::string id);
  void addMor(std::string id, std::string src, std::string dst);
  void setIdentity(const std::string& obj, const std::string& mor);
  void setCompose(const std::string& g, const std::string& f, const std::string& gf);

  // Two-phase path for synthesized categories: prepare() sorts and indexes
  // the cells so callers can resolve ids to final indices once, then fill
  // identities and the (possibly huge) composition table index-wise without
  // materializing id triples.
  const FinCat& prepare(long long composeHint = 0);
  void setIdentityByIndex(int obj, int mor);
  void setComposeByIndex(int g, int f, int gf);

  FinCat build();
  CatPtr buildShared() { return std::make_shared<const FinCat>(build()); }

 private:
  struct RawMor {
    std::string id, src, dst;
  };
  std::vector<std::string> objects_;
  std::vector<RawMor> mors_;
  std::vector<std::pair<std::string, std::string>> identities_;
  std::vector<std::array<std::string, 3>> composes_;
  FinCat pending_;
  bool prepared_ = false;
};

// Checks the categorical laws over the whole table: identity endpoints,
// composability totality, unit laws, associativity.
ValidationReport validate_fin_cat(const FinCat& c);

}  // namespace lendkit
