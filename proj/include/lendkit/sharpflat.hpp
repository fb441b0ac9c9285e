#pragma once

#include "lendkit/iso.hpp"
#include "lendkit/limits.hpp"

namespace lendkit {

// F-sharp: C |-> coend over A of hom(A,C) x FA, the lax morphism classifier
// side. Requires a locally discrete shape (coends tabulate only there).
struct SharpResult {
  TwoFunctorToCat diagram;              // covariant over the same base
  std::vector<CowedgeResult> coends;    // by base object
};
SharpResult sharp_of(const DiagPtr& f, Budget& budget);

// F-flat: C |-> end over A of [hom(C,A), FA], the coclassifier side;
// pseudo mode gives the bicategorical-Yoneda variant.
struct FlatResult {
  TwoFunctorToCat diagram;
  PartialEndResult parts;
  // functor-category data of the integrand value [hom(c,a), F b]
  std::vector<FunctorCatResult> cells;
  int numObjects = 0;
  const FunctorCatResult& cell(int a, int b, int c) const {
    return cells[(a * numObjects + b) * numObjects + c];
  }
};
FlatResult flat_of(const DiagPtr& f, EndMode mode, Budget& budget);

// unit F => F-sharp at x: (A, (1_A, x)); a lax transformation.
LaxTransformation unit_sharp(const DiagPtr& f, const SharpResult& sharp);

// counit F-flat => F by evaluation at the identity; a lax transformation.
LaxTransformation counit_flat(const DiagPtr& f, const FlatResult& flat);

struct AdjunctionReport {
  CatPtr leftHom;    // Lax(F,H) or Lax(H,F)
  CatPtr rightHom;   // strict hom against the (co)classifier
  Funct comparison;  // rightHom -> leftHom
  bool iso = false;
  std::string diagnostics;
};

enum class AdjunctionSide { Sharp, Flat };

// Certifies the adjunction by building both hom-categories and checking the
// canonical comparison is an isomorphism of categories.
AdjunctionReport check_adjunction(const DiagPtr& f, const DiagPtr& h, AdjunctionSide side,
                                  Budget& budget);

struct YonedaCheck {
  bool equivalent = false;
  CatPtr flatValue;
  CatPtr directValue;
};

// Pseudo-flat of f at obj against f(obj), compared up to equivalence.
YonedaCheck yoneda_equivalence_check(const DiagPtr& f, const std::string& objId, Budget& budget);

}  // namespace lendkit
