#include "doctest.h"

#include "lendkit/diagram.hpp"
#include "lendkit/fixtures.hpp"
#include "lendkit/iso.hpp"

using namespace lendkit;

namespace {
Budget big() { return Budget(50000000); }
}

TEST_CASE("constant diagrams validate strictly") {
  Budget b = big();
  for (TwoCatPtr shape : {locally_discrete(fixtures::two()), fixtures::two_cell_shape()}) {
    for (Variance v : {Variance::Covariant, Variance::OpFirst}) {
      TwoFunctorToCat d = constant_diagram(shape, v, fixtures::two(), b);
      CHECK(validate_2functor(d).ok());
      for (const auto& c : d.onObjects) CHECK(*c == *fixtures::two());
      for (const auto& f : d.onOne) CHECK(f == identity_funct(fixtures::two()));
    }
  }
}

TEST_CASE("hom 2-functor of the locally discrete arrow") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat h = hom_2functor(shape, b);
  CHECK(validate_2functor(h).ok());
  SquareView v(h);
  int o0 = shape->objIndexChecked("0"), o1 = shape->objIndexChecked("1");
  CHECK(v.value(o0, o1)->numObjects() == 1);  // hom(0,1) = {a}
  CHECK(v.value(o1, o0)->numObjects() == 0);  // empty
  CHECK(v.value(o0, o0)->numObjects() == 1);
}

TEST_CASE("hom 2-functor of the two-cell shape validates") {
  Budget b = big();
  TwoFunctorToCat h = hom_2functor(fixtures::two_cell_shape(), b);
  CHECK(validate_2functor(h).ok());
}

TEST_CASE("power diagram values are functor categories") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat f = constant_diagram(shape, Variance::Covariant, fixtures::two(), b);
  TwoFunctorToCat g = constant_diagram(shape, Variance::Covariant, fixtures::two(), b);
  TwoFunctorToCat p = power_diagram(f, g, b);
  CHECK(validate_2functor(p).ok());
  for (const auto& c : p.onObjects) {
    CHECK(c->numObjects() == 3);
    CHECK(c->numMors() == 6);
  }
}

TEST_CASE("power diagram over a 2-categorical shape validates") {
  Budget b = big();
  TwoCatPtr shape = fixtures::two_cell_shape();
  // F constant at 1, G constant at two: 2-cells act nontrivially only via G
  TwoFunctorToCat f = constant_diagram(shape, Variance::Covariant, fixtures::one(), b);
  TwoFunctorToCat g = constant_diagram(shape, Variance::Covariant, fixtures::two(), b);
  TwoFunctorToCat p = power_diagram(f, g, b);
  CHECK(validate_2functor(p).ok());
  // [1, two] has two objects
  for (const auto& c : p.onObjects) CHECK(c->numObjects() == 2);
}

TEST_CASE("postcompose power preserves validity") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat h = hom_2functor(shape, b);
  TwoFunctorToCat p = postcompose_power(fixtures::two(), h, b);
  CHECK(validate_2functor(p).ok());
  CHECK(p.variance == Variance::OpFirst);
}

TEST_CASE("swap of a square diagram validates over the opposite base") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat h = hom_2functor(shape, b);
  TwoFunctorToCat s = swap_square_diagram(h, b);
  CHECK(validate_2functor(s).ok());
  SquareView vh(h);
  SquareView vs(s);
  int o0 = shape->objIndexChecked("0"), o1 = shape->objIndexChecked("1");
  CHECK(*vs.value(o0, o1) == *vh.value(o1, o0));
}

TEST_CASE("second slot diagram realizes G after the projection") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat g = constant_diagram(shape, Variance::Covariant, fixtures::parallel_pair(), b);
  TwoFunctorToCat t = second_slot_diagram(g, b);
  CHECK(validate_2functor(t).ok());
  SquareView v(t);
  CHECK(*v.value(0, 1) == *fixtures::parallel_pair());
}

TEST_CASE("a 2-functor with a broken composite is reported") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat d = constant_diagram(shape, Variance::Covariant, fixtures::two(), b);
  // sabotage the image of the non-identity 1-cell
  int a = shape->oneIndexChecked("a");
  Funct bad = d.onOne[a];
  // swap the two objects, which breaks identity-compatibility with endpoints
  bad.objMap = {1, 0};
  bad.morMap[fixtures::two()->morIndexChecked("id0")] = fixtures::two()->morIndexChecked("id1");
  bad.morMap[fixtures::two()->morIndexChecked("id1")] = fixtures::two()->morIndexChecked("id0");
  bad.morMap[fixtures::two()->morIndexChecked("a")] = fixtures::two()->morIndexChecked("a");
  d.onOne[a] = bad;
  ValidationReport rep = validate_2functor(d);
  CHECK(!rep.ok());
}

TEST_CASE("triple shape restriction produces valid square diagrams") {
  Budget b = big();
  TwoCatPtr base = locally_discrete(fixtures::two());
  TwoCatPtr extra = locally_discrete(fixtures::discrete2());
  TwoFunctorToCat t;
  t.base = base;
  t.extra = extra;
  t.variance = Variance::OpFirstExtra;
  t.shape = triple_shape(base, extra, b);
  CatPtr val = fixtures::two();
  Funct idF = identity_funct(val);
  NatT idT = identity_natt(idF);
  t.onObjects.assign(t.shape->numObjects(), val);
  t.onOne.assign(t.shape->numOne(), idF);
  t.onTwo.assign(t.shape->numTwo(), idT);
  CHECK(validate_2functor(t).ok());
  TripleView v(t);
  TwoFunctorToCat r = v.restrict(0, b);
  CHECK(validate_2functor(r).ok());
  CHECK(r.variance == Variance::OpFirst);
}
