#pragma once

#include <functional>

#include "lendkit/enumerate.hpp"
#include "lendkit/twocat.hpp"

namespace lendkit {

// How the honest covariant domain ("shape") was derived from the base:
//   Covariant     - shape == base                       (F, G : A -> Cat)
//   OpFirst       - shape == op(base) x base            (T : A^op x A -> Cat)
//   OpFirstExtra  - shape == (op(base) x base) x extra  (T : A^op x A x B -> Cat)
enum class Variance { Covariant, OpFirst, OpFirstExtra };

std::string variance_name(Variance v);
Variance variance_from_name(const std::string& s);

TwoCatPtr square_shape(const TwoCatPtr& base, Budget& budget);
TwoCatPtr triple_shape(const TwoCatPtr& base, const TwoCatPtr& extra, Budget& budget);

// A strict 2-functor from the shape into finite categories.
struct TwoFunctorToCat {
  TwoCatPtr base;
  TwoCatPtr extra;  // OpFirstExtra only
  Variance variance = Variance::Covariant;
  TwoCatPtr shape;
  std::vector<CatPtr> onObjects;
  std::vector<Funct> onOne;
  std::vector<NatT> onTwo;

  const CatPtr& at(int shapeObj) const { return onObjects[shapeObj]; }
};

ValidationReport validate_2functor(const TwoFunctorToCat& t);

// Cached pair-index tables for a diagram over A^op x A.
class SquareView {
 public:
  explicit SquareView(const TwoFunctorToCat& t);

  const Fin2Cat& base() const { return *t_->base; }
  int shapeObj(int a, int b) const { return obj_[a * nObj_ + b]; }
  int shapeOne(int f, int g) const { return one_[f * nOne_ + g]; }
  int shapeTwo(int s, int u) const { return two_[s * nTwo_ + u]; }

  CatPtr value(int a, int b) const { return t_->onObjects[shapeObj(a, b)]; }
  // T(f, g) : T(dst f, src g) -> T(src f, dst g)
  const Funct& act(int f, int g) const { return t_->onOne[shapeOne(f, g)]; }
  const NatT& act2(int s, int u) const { return t_->onTwo[shapeTwo(s, u)]; }
  // T(1_A, f) : T(A,A) -> T(A,B)  and  T(f, 1_B) : T(B,B) -> T(A,B)
  const Funct& covAct(int f) const;
  const Funct& conAct(int f) const;

 private:
  const TwoFunctorToCat* t_;
  int nObj_, nOne_, nTwo_;
  std::vector<int32_t> obj_, one_, two_;
};

// Same caching for a diagram over (A^op x A) x B.
class TripleView {
 public:
  explicit TripleView(const TwoFunctorToCat& t);

  const Fin2Cat& base() const { return *t_->base; }
  const Fin2Cat& extra() const { return *t_->extra; }
  int shapeObj(int a, int b, int e) const { return obj_[(a * nObj_ + b) * nExtraObj_ + e]; }
  int shapeOne(int f, int g, int h) const { return one_[(f * nOne_ + g) * nExtraOne_ + h]; }
  int shapeTwo(int s, int u, int w) const { return two_[(s * nTwo_ + u) * nExtraTwo_ + w]; }

  CatPtr value(int a, int b, int e) const { return t_->onObjects[shapeObj(a, b, e)]; }
  const Funct& act(int f, int g, int h) const { return t_->onOne[shapeOne(f, g, h)]; }
  const NatT& act2(int s, int u, int w) const { return t_->onTwo[shapeTwo(s, u, w)]; }

  // The square diagram T(-,-,e) at a fixed extra object.
  TwoFunctorToCat restrict(int e, Budget& budget) const;

 private:
  const TwoFunctorToCat* t_;
  int nObj_, nOne_, nTwo_, nExtraObj_, nExtraOne_, nExtraTwo_;
  std::vector<int32_t> obj_, one_, two_;
};

// Generic assembly of a square diagram from per-pair data. The callbacks
// receive base indices; orientation is (contravariant, covariant).
TwoFunctorToCat make_square_diagram(
    const TwoCatPtr& base, Budget& budget,
    const std::function<CatPtr(int, int)>& value,
    const std::function<Funct(int, int)>& action,
    const std::function<NatT(int, int)>& action2);

// Same for a diagram over (op(base) x base) x extra; slots are
// (contravariant, covariant, extra-covariant).
TwoFunctorToCat make_triple_diagram(
    const TwoCatPtr& base, const TwoCatPtr& extra, Budget& budget,
    const std::function<CatPtr(int, int, int)>& value,
    const std::function<Funct(int, int, int)>& action,
    const std::function<NatT(int, int, int)>& action2);

TwoFunctorToCat constant_diagram(const TwoCatPtr& base, Variance v, const CatPtr& value,
                                 Budget& budget);

// The hom 2-functor A(-,=) : A^op x A -> Cat.
TwoFunctorToCat hom_2functor(const TwoCatPtr& a, Budget& budget);

// (A', A) |-> [F A', G A] over the common shape of F and G (used as base).
TwoFunctorToCat power_diagram(const TwoFunctorToCat& f, const TwoFunctorToCat& g, Budget& budget);

// Applies [x, -] pointwise, preserving shape and variance.
TwoFunctorToCat postcompose_power(const CatPtr& x, const TwoFunctorToCat& t, Budget& budget);

// Reindex along a strict shape map; metadata (base/extra/variance) supplied.
TwoFunctorToCat precompose_diagram(const TwoFunctorToCat& t, const ShapeMap& m,
                                   const TwoCatPtr& newBase, const TwoCatPtr& newExtra,
                                   Variance v);

// A covariant diagram whose shape happens to be op(b) x b, rebuilt as an
// OpFirst diagram over b; throws unless the shapes agree structurally.
TwoFunctorToCat reinterpret_as_square(const TwoFunctorToCat& t, const TwoCatPtr& b, Budget& budget);

// T over A (OpFirst, A locally discrete) rebuilt as swap(T) over op(A):
// swap(T)(X, Y) = T(Y, X). Realizes the oplax/lax duality route.
TwoFunctorToCat swap_square_diagram(const TwoFunctorToCat& t, Budget& budget);

// Restriction of a covariant diagram G over A to T(A,B) := G(B) over
// A^op x A; the Grothendieck construction is its lax coend.
TwoFunctorToCat second_slot_diagram(const TwoFunctorToCat& g, Budget& budget);

}  // namespace lendkit
