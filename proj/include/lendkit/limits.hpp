#pragma once

#include "lendkit/coend.hpp"
#include "lendkit/descent.hpp"

namespace lendkit {

struct WeightedLimitResult {
  CatPtr category;
  std::string construction;  // which representation produced it
};

// laxlim^F G (or its oplax/pseudo variant) as the end of [F-, G=].
WeightedLimitResult lax_limit(const DiagPtr& f, const DiagPtr& g, EndMode mode, Budget& budget);

// Strict weighted limit: the strict end of the power diagram.
WeightedLimitResult weighted_limit_strict(const DiagPtr& w, const DiagPtr& t, Budget& budget);

// Total category of a covariant diagram over a locally discrete shape:
// objects (A, x), morphisms (f, G f (x) -> y).
struct GrothendieckResult {
  CatPtr category;
  CowedgeResult cowedge;
};
GrothendieckResult grothendieck(const DiagPtr& g, Budget& budget);

// Objects are 1-cells into c; a morphism p -> q is (f, fbar : p => q . f),
// composed by pasting.
struct LaxSliceResult {
  CatPtr category;
  std::vector<int32_t> objOneCell;                     // object -> 1-cell of the shape
  std::vector<std::pair<int32_t, int32_t>> morData;    // morphism -> (f, fbar)
};
LaxSliceResult lax_slice(const TwoCatPtr& a, const std::string& objId, Budget& budget);

// (A, A') |-> coend over C of hom(A,C) x hom(C,A'): the weight that
// presents lax ends as strict weighted limits.
TwoFunctorToCat yoneda_sharp_weight(const TwoCatPtr& a, Budget& budget);

}  // namespace lendkit
