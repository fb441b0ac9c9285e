#pragma once

#include <string>
#include <vector>

#include "lendkit/fincat.hpp"

namespace lendkit {

bool same_category(const CatPtr& a, const CatPtr& b);

// A functor between finite categories, tabulated on every object and
// morphism of the domain.
struct Funct {
  CatPtr dom, cod;
  std::vector<int32_t> objMap;  // dom object index -> cod object index
  std::vector<int32_t> morMap;  // dom morphism index -> cod morphism index

  int onObj(int o) const { return objMap[o]; }
  int onMor(int m) const { return morMap[m]; }
  bool operator==(const Funct& o) const;

  // Morphism images in domain order; the canonical functor-as-object id.
  std::string canonicalId() const;
};

Funct identity_funct(CatPtr c);
Funct compose_funct(const Funct& g, const Funct& f);  // g after f
ValidationReport validate_funct(const Funct& f);
bool is_funct(const Funct& f);

// A natural transformation src => dst between parallel functors.
struct NatT {
  Funct src, dst;
  std::vector<int32_t> comp;  // dom object index -> cod morphism index

  int at(int o) const { return comp[o]; }
  bool operator==(const NatT& o) const;
  bool isIdentityOn(const Funct& f) const;
  std::string canonicalId() const;
};

NatT identity_natt(const Funct& f);
NatT vcomp(const NatT& beta, const NatT& alpha);        // beta after alpha
NatT whisker_left(const Funct& h, const NatT& alpha);   // h * alpha : h.F => h.G
NatT whisker_right(const NatT& alpha, const Funct& k);  // alpha * k : F.k => G.k
NatT hcomp_natt(const NatT& beta, const NatT& alpha);   // beta . alpha (outer after inner)
ValidationReport validate_natt(const NatT& t);
bool is_natt(const NatT& t);
bool natt_invertible(const NatT& t);

}  // namespace lendkit
