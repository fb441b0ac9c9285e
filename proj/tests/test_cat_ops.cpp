#include "doctest.h"

#include "lendkit/cat_ops.hpp"
#include "lendkit/enumerate.hpp"
#include "lendkit/fixtures.hpp"
#include "lendkit/iso.hpp"

using namespace lendkit;

namespace {
Budget big() { return Budget(50000000); }
}

TEST_CASE("product of two arrow categories: 4 objects, 9 morphisms") {
  Budget b = big();
  auto p = product_cat(fixtures::two(), fixtures::two(), b);
  CHECK(p.cat->numObjects() == 4);
  CHECK(p.cat->numMors() == 9);
  CHECK(validate_fin_cat(*p.cat).ok());
  CHECK(is_funct(p.projections[0]));
  CHECK(is_funct(p.projections[1]));
}

TEST_CASE("unit law of product: 1 x B iso to B") {
  Budget b = big();
  auto p = product_cat(fixtures::one(), fixtures::square_poset(), b);
  CHECK(is_isomorphic(p.cat, fixtures::square_poset(), b).has_value());
}

TEST_CASE("empty indexed product is terminal") {
  Budget b = big();
  auto p = product_cat_indexed({}, b);
  CHECK(p.cat->numObjects() == 1);
  CHECK(p.cat->numMors() == 1);
  CHECK(validate_fin_cat(*p.cat).ok());
}

TEST_CASE("opposite is a bit-exact involution") {
  for (CatPtr c : {fixtures::two(), fixtures::square_poset(), fixtures::parallel_pair(),
                   fixtures::asym3(), fixtures::iso_pair()}) {
    CHECK(validate_fin_cat(*opposite_cat(c)).ok());
    CHECK(*opposite_cat(opposite_cat(c)) == *c);
  }
}

TEST_CASE("opposite of the arrow is isomorphic to the arrow via relabeling") {
  Budget b = big();
  CHECK(is_isomorphic(opposite_cat(fixtures::two()), fixtures::two(), b).has_value());
}

TEST_CASE("an asymmetric category need not be isomorphic to its opposite") {
  Budget b = big();
  CHECK(!is_isomorphic(opposite_cat(fixtures::asym3()), fixtures::asym3(), b).has_value());
}

TEST_CASE("slice of the arrow over 1: two objects, three morphisms, terminal id1") {
  Budget b = big();
  auto s = slice_over(fixtures::two(), "1", b);
  CHECK(s.cat->numObjects() == 2);
  CHECK(s.cat->numMors() == 3);
  CHECK(validate_fin_cat(*s.cat).ok());
  CHECK(is_funct(s.projection));
  // id1 is terminal in the slice
  int idObj = s.cat->objIndexChecked("id1");
  for (int o = 0; o < s.cat->numObjects(); ++o) CHECK(s.cat->hom(o, idObj).size() == 1);
}

TEST_CASE("slice of terminal over its point is terminal") {
  Budget b = big();
  auto s = slice_over(fixtures::one(), "*", b);
  CHECK(is_isomorphic(s.cat, fixtures::one(), b).has_value());
}

TEST_CASE("inserter examples") {
  Budget b = big();
  CatPtr two = fixtures::two();

  SUBCASE("identity functors on the arrow: inserter iso to the arrow") {
    Funct id = identity_funct(two);
    auto ins = inserter(id, id, b);
    CHECK(validate_fin_cat(*ins.cat).ok());
    CHECK(is_funct(ins.projection));
    CHECK(is_natt(ins.inserted));
    CHECK(is_isomorphic(ins.cat, two, b).has_value());
  }

  SUBCASE("points 0 and 1 of the arrow: inserter is terminal") {
    std::vector<Funct> pts = enumerate_functors(fixtures::one(), two, b);
    REQUIRE(pts.size() == 2);  // constant 0 and constant 1, in order
    auto ins = inserter(pts[0], pts[1], b);
    CHECK(ins.cat->numObjects() == 1);
    CHECK(is_isomorphic(ins.cat, fixtures::one(), b).has_value());
    // the inserted 2-cell picks the unique arrow a
    CHECK(ins.cat->objIndexChecked(pair_id("*", "a")) == 0);
  }

  SUBCASE("inserter contains (A, id) for every A when f = g") {
    Funct id = identity_funct(fixtures::square_poset());
    auto ins = inserter(id, id, b);
    for (const auto& o : fixtures::square_poset()->objects()) {
      int i = fixtures::square_poset()->objIndexChecked(o);
      int m = fixtures::square_poset()->identity(i);
      CHECK(ins.cat->objIndex(pair_id(o, fixtures::square_poset()->mor(m).id)) >= 0);
    }
  }
}

TEST_CASE("inserter universal property by exhaustive factorization") {
  Budget b = big();
  // f, g : parallel_pair -> two picking the two constants
  CatPtr pp = fixtures::parallel_pair();
  CatPtr two = fixtures::two();
  std::vector<Funct> fs = enumerate_functors(pp, two, b);
  REQUIRE(fs.size() >= 2);
  const Funct& f = fs.front();  // constant 0
  const Funct& g = fs.back();   // constant 1
  auto ins = inserter(f, g, b);
  CHECK(validate_fin_cat(*ins.cat).ok());

  for (CatPtr y : {fixtures::one(), fixtures::two(), fixtures::discrete2()}) {
    std::vector<Funct> ys = enumerate_functors(y, pp, b);
    std::vector<Funct> intoIns = enumerate_functors(y, ins.cat, b);
    for (const Funct& u : ys) {
      // candidate 2-cells eta : f.u => g.u
      for (const NatT& eta : enumerate_natts(compose_funct(f, u), compose_funct(g, u), b)) {
        int count = 0;
        for (const Funct& w : intoIns) {
          if (!(compose_funct(ins.projection, w) == u)) continue;
          if (whisker_right(ins.inserted, w) == eta) ++count;
        }
        CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("equifier examples") {
  Budget b = big();
  CatPtr pp = fixtures::parallel_pair();
  CatPtr two = fixtures::two();

  SUBCASE("equifier of alpha with itself is the whole domain") {
    Funct id = identity_funct(two);
    NatT idT = identity_natt(id);
    auto eq = equifier(idT, idT);
    CHECK(*eq.cat == *two);
  }

  SUBCASE("never-equal components give the empty subcategory") {
    // constants 0, 1 : two -> parallel_pair, alpha constant u, beta constant v
    std::vector<Funct> fs = enumerate_functors(two, pp, b);
    Funct c0, c1;
    for (const Funct& f : fs) {
      if (f.objMap[0] == 0 && f.objMap[1] == 0) c0 = f;
      if (f.objMap[0] == 1 && f.objMap[1] == 1) c1 = f;
    }
    REQUIRE(!c0.objMap.empty());
    REQUIRE(!c1.objMap.empty());
    // naturality over the arrow forces equal components: only uu and vv
    std::vector<NatT> nts = enumerate_natts(c0, c1, b);
    REQUIRE(nts.size() == 2);
    auto eq = equifier(nts[0], nts[1]);
    CHECK(eq.cat->numObjects() == 0);
  }

  SUBCASE("agreement on exactly one object keeps that object only") {
    // discrete domain, so components are independent
    CatPtr d2 = fixtures::discrete2();
    std::vector<Funct> fs = enumerate_functors(d2, pp, b);
    Funct c0, c1;
    for (const Funct& f : fs) {
      if (f.objMap[0] == 0 && f.objMap[1] == 0) c0 = f;
      if (f.objMap[0] == 1 && f.objMap[1] == 1) c1 = f;
    }
    std::vector<NatT> nts = enumerate_natts(c0, c1, b);
    REQUIRE(nts.size() == 4);
    int u = pp->morIndexChecked("u"), v = pp->morIndexChecked("v");
    NatT alpha, mixed;
    for (const NatT& t : nts) {
      if (t.comp[0] == u && t.comp[1] == u) alpha = t;
      if (t.comp[0] == u && t.comp[1] == v) mixed = t;
    }
    REQUIRE(!alpha.comp.empty());
    REQUIRE(!mixed.comp.empty());
    auto eq = equifier(alpha, mixed);
    CHECK(eq.cat->numObjects() == 1);
    CHECK(eq.cat->objectId(0) == "0");
    CHECK(is_funct(eq.inclusion));
  }
}

TEST_CASE("equifier universal property: unique factorization through the inclusion") {
  Budget b = big();
  CatPtr pp = fixtures::parallel_pair();
  CatPtr d2 = fixtures::discrete2();
  std::vector<Funct> fs = enumerate_functors(d2, pp, b);
  Funct c0, c1;
  for (const Funct& f : fs) {
    if (f.objMap[0] == 0 && f.objMap[1] == 0) c0 = f;
    if (f.objMap[0] == 1 && f.objMap[1] == 1) c1 = f;
  }
  std::vector<NatT> nts = enumerate_natts(c0, c1, b);
  int u = pp->morIndexChecked("u"), v = pp->morIndexChecked("v");
  NatT alpha, mixed;
  for (const NatT& t : nts) {
    if (t.comp[0] == u && t.comp[1] == u) alpha = t;
    if (t.comp[0] == u && t.comp[1] == v) mixed = t;
  }
  auto eq = equifier(alpha, mixed);
  int factored = 0;
  for (CatPtr y : {fixtures::one(), fixtures::two()}) {
    for (const Funct& w : enumerate_functors(y, d2, b)) {
      // w equalizes iff alpha.w == mixed.w
      if (!(whisker_right(alpha, w) == whisker_right(mixed, w))) continue;
      ++factored;
      int count = 0;
      for (const Funct& z : enumerate_functors(y, eq.cat, b))
        if (compose_funct(eq.inclusion, z) == w) ++count;
      CHECK(count == 1);
    }
  }
  CHECK(factored > 0);
}

TEST_CASE("binary products: poset meets and counterexamples") {
  CatPtr sq = fixtures::square_poset();
  SUBCASE("meet of the two middle objects is the bottom") {
    auto w = check_binary_product(*sq, sq->objIndexChecked("a"), sq->objIndexChecked("b"));
    REQUIRE(w.has_value());
    CHECK(sq->objectId(w->apex) == "0");
  }
  SUBCASE("product with the terminal object is the object itself") {
    auto w = check_binary_product(*sq, sq->objIndexChecked("a"), sq->objIndexChecked("3"));
    REQUIRE(w.has_value());
    CHECK(sq->objectId(w->apex) == "a");
  }
  SUBCASE("in the arrow category, 0 x 1 = 0") {
    CatPtr two = fixtures::two();
    auto w = check_binary_product(*two, two->objIndexChecked("0"), two->objIndexChecked("1"));
    REQUIRE(w.has_value());
    CHECK(two->objectId(w->apex) == "0");
  }
  SUBCASE("discrete two objects have no product") {
    CatPtr d = fixtures::discrete2();
    CHECK(!check_binary_product(*d, 0, 1).has_value());
  }
}

TEST_CASE("binary product agrees with the hom-set bijection oracle") {
  // Independent route: p with projections is a product iff pairing with the
  // projections is a bijection hom(z,p) -> hom(z,x) x hom(z,y) for all z.
  for (CatPtr c : {fixtures::square_poset(), fixtures::two(), fixtures::iso_pair()}) {
    for (int x = 0; x < c->numObjects(); ++x)
      for (int y = 0; y < c->numObjects(); ++y) {
        auto w = check_binary_product(*c, x, y);
        if (!w) continue;
        for (int z = 0; z < c->numObjects(); ++z) {
          size_t lhs = c->hom(z, w->apex).size();
          size_t rhs = c->hom(z, x).size() * c->hom(z, y).size();
          CHECK(lhs == rhs);
        }
      }
  }
}
