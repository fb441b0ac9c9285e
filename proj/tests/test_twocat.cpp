#include "doctest.h"

#include "lendkit/cat_ops.hpp"
#include "lendkit/fixtures.hpp"
#include "lendkit/twocat.hpp"

using namespace lendkit;

namespace {
Budget big() { return Budget(50000000); }
}

TEST_CASE("locally discrete 2-categories validate and round-trip") {
  for (CatPtr c : {fixtures::one(), fixtures::two(), fixtures::square_poset(),
                   fixtures::parallel_pair()}) {
    TwoCatPtr t = locally_discrete(c);
    CHECK(validate_fin_2cat(*t).ok());
    CHECK(t->locallyDiscrete());
    CHECK(*underlying_category(*t) == *c);
  }
}

TEST_CASE("locally discrete arrow: 3 one-cells, 3 two-cells") {
  TwoCatPtr t = locally_discrete(fixtures::two());
  CHECK(t->numObjects() == 2);
  CHECK(t->numOne() == 3);
  CHECK(t->numTwo() == 3);
}

TEST_CASE("the two-cell fixture shape validates and is not locally discrete") {
  TwoCatPtr s = fixtures::two_cell_shape();
  CHECK(validate_fin_2cat(*s).ok());
  CHECK(!s->locallyDiscrete());
  CHECK(s->numTwo() == 5);
}

TEST_CASE("local hom categories of the two-cell shape") {
  TwoCatPtr s = fixtures::two_cell_shape();
  int p = s->objIndexChecked("P"), q = s->objIndexChecked("Q");
  CatPtr pq = s->localHom(p, q);
  CHECK(pq->numObjects() == 2);   // u, v
  CHECK(pq->numMors() == 3);      // two identities and mu
  CHECK(validate_fin_cat(*pq).ok());
  CatPtr qp = s->localHom(q, p);
  CHECK(qp->numObjects() == 0);
  CatPtr pp = s->localHom(p, p);
  CHECK(pp->numObjects() == 1);
}

TEST_CASE("dualize is an involution per mode") {
  for (TwoCatPtr s : {fixtures::two_cell_shape(), locally_discrete(fixtures::two())}) {
    for (DualMode m : {DualMode::Op, DualMode::Co, DualMode::Coop}) {
      TwoCatPtr d = dualize_2cat(*s, m);
      CHECK(validate_fin_2cat(*d).ok());
      CHECK(*dualize_2cat(*d, m) == *s);
    }
  }
}

TEST_CASE("op of locally discrete agrees with locally discrete of opposite") {
  CatPtr two = fixtures::two();
  TwoCatPtr lhs = dualize_2cat(*locally_discrete(two), DualMode::Op);
  TwoCatPtr rhs = locally_discrete(opposite_cat(two));
  CHECK(*lhs == *rhs);
}

TEST_CASE("co of a locally discrete 2-category is itself") {
  TwoCatPtr t = locally_discrete(fixtures::square_poset());
  CHECK(*dualize_2cat(*t, DualMode::Co) == *t);
}

TEST_CASE("co of the two-cell shape flips mu") {
  TwoCatPtr s = fixtures::two_cell_shape();
  TwoCatPtr c = dualize_2cat(*s, DualMode::Co);
  int mu = c->twoIndexChecked("mu");
  CHECK(c->one(c->two(mu).src).id == "v");
  CHECK(c->one(c->two(mu).dst).id == "u");
}

TEST_CASE("product of 2-categories validates with componentwise cells") {
  Budget b = big();
  TwoCatPtr s = fixtures::two_cell_shape();
  TwoCatPtr t = locally_discrete(fixtures::two());
  TwoCatPtr p = product_2cat(s, t, b);
  CHECK(p->numObjects() == 4);
  CHECK(p->numOne() == s->numOne() * t->numOne());
  CHECK(p->numTwo() == s->numTwo() * t->numTwo());
  CHECK(validate_fin_2cat(*p).ok());
}

TEST_CASE("whiskering is derived from horizontal composition") {
  TwoCatPtr s = fixtures::two_cell_shape();
  int mu = s->twoIndexChecked("mu");
  int idu = s->twoIndexChecked(two_id_of("u"));
  CHECK(s->vcomp(mu, idu) == mu);
  CHECK(s->whiskerL(s->oneIndexChecked("idQ"), mu) == mu);
  CHECK(s->whiskerR(mu, s->oneIndexChecked("idP")) == mu);
}

TEST_CASE("a broken interchange table is reported") {
  // vcomp entry pointing at the wrong cell gets flagged by validation
  Fin2CatBuilder b;
  b.addObject("P");
  b.addOne("idP", "P", "P");
  b.setIdOne("P", "idP");
  b.addTwo("t0", "idP", "idP");
  b.addTwo("t1", "idP", "idP");
  b.setIdTwo("idP", "t0");
  b.setComposeOne("idP", "idP", "idP");
  // t1 . t1 := t1 but t1 . t0 := t1, t0 . t1 := t0 breaks unitality
  b.setVcomp("t0", "t0", "t0");
  b.setVcomp("t1", "t0", "t1");
  b.setVcomp("t0", "t1", "t0");
  b.setVcomp("t1", "t1", "t1");
  b.setHcomp("t0", "t0", "t0");
  b.setHcomp("t1", "t0", "t1");
  b.setHcomp("t0", "t1", "t0");
  b.setHcomp("t1", "t1", "t1");
  ValidationReport rep = validate_fin_2cat(b.build());
  CHECK(!rep.ok());
}
