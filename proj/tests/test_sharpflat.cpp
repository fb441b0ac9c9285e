#include "doctest.h"

#include "lendkit/fixtures.hpp"
#include "lendkit/sharpflat.hpp"

using namespace lendkit;

namespace {
Budget big() { return Budget(200000000); }

DiagPtr constant_cov(const TwoCatPtr& shape, const CatPtr& v) {
  Budget b = big();
  return share(constant_diagram(shape, Variance::Covariant, v, b));
}

// representable hom(-, obj) over op(a) for a locally discrete 1-category a:
// as a covariant diagram over locally_discrete(op(a)).
DiagPtr representable_presheaf(const CatPtr& a, const std::string& obj) {
  Budget b = big();
  TwoCatPtr opShape = locally_discrete(opposite_cat(a));
  TwoCatPtr ld = locally_discrete(a);
  TwoFunctorToCat hom = hom_2functor(ld, b);
  SquareView v(hom);
  int c = a->objIndexChecked(obj);
  TwoFunctorToCat r;
  r.base = opShape;
  r.variance = Variance::Covariant;
  r.shape = opShape;
  const Fin2Cat& base = *ld;
  r.onObjects.resize(base.numObjects());
  r.onOne.resize(base.numOne());
  r.onTwo.resize(base.numTwo());
  for (int x = 0; x < base.numObjects(); ++x) r.onObjects[x] = v.value(x, c);
  for (int f = 0; f < base.numOne(); ++f) {
    // in op(a), f : dst -> src acts by precomposition hom(dst,obj) -> hom(src,obj)
    r.onOne[f] = v.act(f, base.idOne(c));
  }
  for (int u = 0; u < base.numTwo(); ++u) r.onTwo[u] = identity_natt(r.onOne[base.two(u).src]);
  return share(std::move(r));
}
}  // namespace

TEST_CASE("sharp of the terminal weight over the arrow gives slices") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr w = constant_cov(shape, fixtures::one());
  SharpResult sharp = sharp_of(w, b);
  CHECK(validate_2functor(sharp.diagram).ok());
  int o0 = shape->objIndexChecked("0"), o1 = shape->objIndexChecked("1");
  CHECK(is_isomorphic(sharp.diagram.onObjects[o0], fixtures::one(), b).has_value());
  CHECK(is_isomorphic(sharp.diagram.onObjects[o1], fixtures::two(), b).has_value());
  // the weight's value at the arrow is 1 -> two picking 0: the image of the
  // single object of sharp(0) under sharp(a) is the object (0,(a,*))
  const Funct& act = sharp.diagram.onOne[shape->oneIndexChecked("a")];
  REQUIRE(act.objMap.size() == 1);
  // that object maps to the slice object "a over 1", which is not the terminal id1
  std::string imgId = sharp.diagram.onObjects[o1]->objectId(act.objMap[0]);
  CHECK(imgId.find("id1") == std::string::npos);
}

TEST_CASE("sharp of the terminal weight matches the lax slice everywhere") {
  Budget b = big();
  for (CatPtr cat : {fixtures::two(), fixtures::parallel_pair(), fixtures::square_poset()}) {
    TwoCatPtr shape = locally_discrete(cat);
    DiagPtr w = constant_cov(shape, fixtures::one());
    SharpResult sharp = sharp_of(w, b);
    for (int c = 0; c < shape->numObjects(); ++c) {
      auto ls = lax_slice(shape, shape->objectId(c), b);
      CHECK(is_isomorphic(sharp.diagram.onObjects[c], ls.category, b).has_value());
    }
  }
}

TEST_CASE("sharp over the terminal shape is the diagram itself") {
  Budget b = big();
  DiagPtr f = constant_cov(terminal_2cat(), fixtures::parallel_pair());
  SharpResult sharp = sharp_of(f, b);
  CHECK(is_isomorphic(sharp.diagram.onObjects[0], fixtures::parallel_pair(), b).has_value());
}

TEST_CASE("the unit into sharp validates as a lax transformation") {
  Budget b = big();
  for (CatPtr cat : {fixtures::two(), fixtures::parallel_pair()}) {
    TwoCatPtr shape = locally_discrete(cat);
    for (DiagPtr f : {constant_cov(shape, fixtures::one()), constant_cov(shape, fixtures::two())}) {
      SharpResult sharp = sharp_of(f, b);
      LaxTransformation eta = unit_sharp(f, sharp);
      CHECK(validate_lax_transformation(eta, TransMode::Lax).ok());
    }
  }
}

TEST_CASE("unit over the terminal shape is an isomorphism") {
  Budget b = big();
  DiagPtr f = constant_cov(terminal_2cat(), fixtures::two());
  SharpResult sharp = sharp_of(f, b);
  LaxTransformation eta = unit_sharp(f, sharp);
  // single component, bijective on objects and morphisms
  const Funct& c = eta.components[0];
  std::vector<int> objHit(c.cod->numObjects(), 0), morHit(c.cod->numMors(), 0);
  for (int32_t o : c.objMap) ++objHit[o];
  for (int32_t m : c.morMap) ++morHit[m];
  CHECK(c.dom->numObjects() == c.cod->numObjects());
  CHECK(c.dom->numMors() == c.cod->numMors());
  for (int v : objHit) CHECK(v == 1);
  for (int v : morHit) CHECK(v == 1);
}

TEST_CASE("flat values over the terminal shape recover the diagram") {
  Budget b = big();
  DiagPtr f = constant_cov(terminal_2cat(), fixtures::parallel_pair());
  FlatResult flat = flat_of(f, EndMode::Lax, b);
  CHECK(validate_2functor(flat.diagram).ok());
  CHECK(is_isomorphic(flat.diagram.onObjects[0], fixtures::parallel_pair(), b).has_value());
}

TEST_CASE("flat of the terminal constant is terminal") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr f = constant_cov(shape, fixtures::one());
  FlatResult flat = flat_of(f, EndMode::Lax, b);
  for (const auto& v : flat.diagram.onObjects)
    CHECK(is_isomorphic(v, fixtures::one(), b).has_value());
}

TEST_CASE("the counit from flat validates as a lax transformation") {
  Budget b = big();
  for (CatPtr cat : {fixtures::two(), fixtures::parallel_pair()}) {
    TwoCatPtr shape = locally_discrete(cat);
    for (DiagPtr f : {constant_cov(shape, fixtures::two())}) {
      FlatResult flat = flat_of(f, EndMode::Lax, b);
      LaxTransformation eps = counit_flat(f, flat);
      CHECK(validate_lax_transformation(eps, TransMode::Lax).ok());
    }
  }
}

TEST_CASE("sharp adjunction: comparison is an isomorphism") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr f = constant_cov(shape, fixtures::one());

  SUBCASE("against the terminal constant") {
    DiagPtr h = constant_cov(shape, fixtures::one());
    AdjunctionReport rep = check_adjunction(f, h, AdjunctionSide::Sharp, b);
    CHECK(rep.iso);
    CHECK(is_isomorphic(rep.leftHom, fixtures::one(), b).has_value());
  }
  SUBCASE("against the arrow constant") {
    DiagPtr h = constant_cov(shape, fixtures::two());
    AdjunctionReport rep = check_adjunction(f, h, AdjunctionSide::Sharp, b);
    CHECK(rep.iso);
  }
  SUBCASE("against sharp of the weight itself") {
    SharpResult sharp = sharp_of(f, b);
    DiagPtr h = share(sharp.diagram);
    AdjunctionReport rep = check_adjunction(f, h, AdjunctionSide::Sharp, b);
    CHECK(rep.iso);
    CHECK(rep.leftHom->numObjects() == rep.rightHom->numObjects());
    CHECK(rep.leftHom->numMors() == rep.rightHom->numMors());
  }
}

TEST_CASE("flat adjunction: comparison is an isomorphism") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr h = constant_cov(shape, fixtures::one());

  SUBCASE("F terminal") {
    DiagPtr f = constant_cov(shape, fixtures::one());
    AdjunctionReport rep = check_adjunction(f, h, AdjunctionSide::Flat, b);
    CHECK(rep.iso);
  }
  SUBCASE("F the arrow constant") {
    DiagPtr f = constant_cov(shape, fixtures::two());
    AdjunctionReport rep = check_adjunction(f, h, AdjunctionSide::Flat, b);
    CHECK(rep.iso);
  }
  SUBCASE("over the two-cell shape") {
    TwoCatPtr s2 = fixtures::two_cell_shape();
    DiagPtr f = constant_cov(s2, fixtures::two());
    DiagPtr h2 = constant_cov(s2, fixtures::one());
    AdjunctionReport rep = check_adjunction(f, h2, AdjunctionSide::Flat, b);
    CHECK(rep.iso);
  }
}

TEST_CASE("bicategorical yoneda: pseudo-flat of representables is equivalent pointwise") {
  Budget b = big();
  SUBCASE("terminal shape: equivalence is an isomorphism") {
    DiagPtr f = constant_cov(terminal_2cat(), fixtures::two());
    YonedaCheck y = yoneda_equivalence_check(f, "*", b);
    CHECK(y.equivalent);
  }
  SUBCASE("representables over the arrow") {
    CatPtr a = fixtures::two();
    CatPtr opA = opposite_cat(a);
    for (const std::string obj : {"0", "1"}) {
      DiagPtr f = representable_presheaf(a, obj);
      REQUIRE(validate_2functor(*f).ok());
      for (const auto& o : opA->objects()) {
        YonedaCheck y = yoneda_equivalence_check(f, o, b);
        CHECK(y.equivalent);
      }
    }
  }
}
