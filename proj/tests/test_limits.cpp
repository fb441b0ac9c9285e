#include "doctest.h"

#include "lendkit/fixtures.hpp"
#include "lendkit/iso.hpp"
#include "lendkit/limits.hpp"

using namespace lendkit;

namespace {
Budget big() { return Budget(200000000); }

DiagPtr constant_cov(const TwoCatPtr& shape, const CatPtr& v) {
  Budget b = big();
  return share(constant_diagram(shape, Variance::Covariant, v, b));
}

// G over the arrow with G(0)=1, G(1)=two, G(a) picking 0.
DiagPtr comma_target() {
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat g;
  g.base = shape;
  g.variance = Variance::Covariant;
  g.shape = shape;
  g.onObjects.resize(2);
  g.onObjects[shape->objIndexChecked("0")] = fixtures::one();
  g.onObjects[shape->objIndexChecked("1")] = fixtures::two();
  g.onOne.resize(3);
  g.onTwo.resize(3);
  Funct pick0;
  pick0.dom = fixtures::one();
  pick0.cod = fixtures::two();
  pick0.objMap = {fixtures::two()->objIndexChecked("0")};
  pick0.morMap = {fixtures::two()->morIndexChecked("id0")};
  g.onOne[shape->oneIndexChecked("id0")] = identity_funct(fixtures::one());
  g.onOne[shape->oneIndexChecked("id1")] = identity_funct(fixtures::two());
  g.onOne[shape->oneIndexChecked("a")] = pick0;
  for (int f = 0; f < 3; ++f) g.onTwo[shape->idTwo(f)] = identity_natt(g.onOne[f]);
  return share(std::move(g));
}

// the arrow diagram 1 -> B picking b, over the arrow shape
DiagPtr arrow_diagram(const CatPtr& target, const std::string& obj) {
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat g;
  g.base = shape;
  g.variance = Variance::Covariant;
  g.shape = shape;
  g.onObjects.resize(2);
  g.onObjects[shape->objIndexChecked("0")] = fixtures::one();
  g.onObjects[shape->objIndexChecked("1")] = target;
  Funct pick;
  pick.dom = fixtures::one();
  pick.cod = target;
  pick.objMap = {target->objIndexChecked(obj)};
  pick.morMap = {target->identity(target->objIndexChecked(obj))};
  g.onOne.resize(3);
  g.onTwo.resize(3);
  g.onOne[shape->oneIndexChecked("id0")] = identity_funct(fixtures::one());
  g.onOne[shape->oneIndexChecked("id1")] = identity_funct(target);
  g.onOne[shape->oneIndexChecked("a")] = pick;
  for (int f = 0; f < 3; ++f) g.onTwo[shape->idTwo(f)] = identity_natt(g.onOne[f]);
  return share(std::move(g));
}
}  // namespace

TEST_CASE("conical lax limit of the comma target is the comma category") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr weight = constant_cov(shape, fixtures::one());
  WeightedLimitResult r = lax_limit(weight, comma_target(), EndMode::Lax, b);
  CHECK(r.category->numObjects() == 2);
  CHECK(r.category->numMors() == 3);
}

TEST_CASE("lax limit of terminal-valued diagram is terminal") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr weight = constant_cov(shape, fixtures::one());
  DiagPtr g = constant_cov(shape, fixtures::one());
  WeightedLimitResult r = lax_limit(weight, g, EndMode::Lax, b);
  CHECK(is_isomorphic(r.category, fixtures::one(), b).has_value());
}

TEST_CASE("oplax limit of an arrow is the slice category") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr weight = constant_cov(shape, fixtures::one());
  for (auto [cat, obj] : {std::pair{fixtures::two(), std::string("1")},
                          std::pair{fixtures::square_poset(), std::string("3")},
                          std::pair{fixtures::square_poset(), std::string("a")},
                          std::pair{fixtures::parallel_pair(), std::string("1")}}) {
    WeightedLimitResult r = lax_limit(weight, arrow_diagram(cat, obj), EndMode::Oplax, b);
    auto slice = slice_over(cat, obj, b);
    CHECK(is_isomorphic(r.category, slice.cat, b).has_value());
  }
}

TEST_CASE("binary products in slices are pullbacks in the base") {
  Budget b = big();
  // slice of the square poset over the top: products = pullbacks over 3
  CatPtr sq = fixtures::square_poset();
  auto slice = slice_over(sq, "3", b);
  for (int x = 0; x < slice.cat->numObjects(); ++x)
    for (int y = 0; y < slice.cat->numObjects(); ++y) {
      auto w = check_binary_product(*slice.cat, x, y);
      if (!w) continue;
      // the apex's underlying span must be a limit cone over x -> 3 <- y:
      // enumerate competing spans in the base
      int xf = slice.objUnderlying[x];
      int yf = slice.objUnderlying[y];
      int af = slice.objUnderlying[w->apex];
      int p1 = slice.morUnderlying[w->proj1];
      int p2 = slice.morUnderlying[w->proj2];
      int apexObj = sq->mor(af).src;
      // cone pair into (src xf, src yf) agreeing over 3
      for (int z = 0; z < sq->numObjects(); ++z) {
        for (int32_t zf : sq->hom(z, sq->mor(xf).src)) {
          for (int32_t zg : sq->hom(z, sq->mor(yf).src)) {
            if (sq->compose(xf, zf) != sq->compose(yf, zg)) continue;
            int count = 0;
            for (int32_t h : sq->hom(z, apexObj))
              if (sq->compose(p1, h) == zf && sq->compose(p2, h) == zg) ++count;
            CHECK(count == 1);
          }
        }
      }
    }
}

TEST_CASE("grothendieck of a constant diagram is the product") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr g = constant_cov(shape, fixtures::parallel_pair());
  GrothendieckResult r = grothendieck(g, b);
  Budget b2 = big();
  auto p = product_cat(fixtures::two(), fixtures::parallel_pair(), b2);
  CHECK(is_isomorphic(r.category, p.cat, b).has_value());
}

TEST_CASE("grothendieck fiber counts: G(0)=two, G(1)=1") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat g;
  g.base = shape;
  g.variance = Variance::Covariant;
  g.shape = shape;
  g.onObjects.resize(2);
  g.onObjects[shape->objIndexChecked("0")] = fixtures::two();
  g.onObjects[shape->objIndexChecked("1")] = fixtures::one();
  Budget b2 = big();
  auto toOne = enumerate_functors(fixtures::two(), fixtures::one(), b2);
  g.onOne.resize(3);
  g.onTwo.resize(3);
  g.onOne[shape->oneIndexChecked("id0")] = identity_funct(fixtures::two());
  g.onOne[shape->oneIndexChecked("id1")] = identity_funct(fixtures::one());
  g.onOne[shape->oneIndexChecked("a")] = toOne[0];
  for (int f = 0; f < 3; ++f) g.onTwo[shape->idTwo(f)] = identity_natt(g.onOne[f]);
  REQUIRE(validate_2functor(g).ok());
  GrothendieckResult r = grothendieck(share(std::move(g)), b);
  CHECK(r.category->numObjects() == 3);
  CHECK(r.category->numMors() == 6);
}

TEST_CASE("grothendieck over the terminal shape is the value") {
  Budget b = big();
  DiagPtr g = constant_cov(terminal_2cat(), fixtures::parallel_pair());
  GrothendieckResult r = grothendieck(g, b);
  CHECK(is_isomorphic(r.category, fixtures::parallel_pair(), b).has_value());
}

TEST_CASE("grothendieck satisfies the conical lax cocone universal property") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr g = comma_target();
  GrothendieckResult r = grothendieck(g, b);
  // lax cocones under G with small apexes: components k_A : G A -> Y with
  // structure k_B . G f => k_A ... realized here against the injections
  for (CatPtr apex : {fixtures::one(), fixtures::two()}) {
    auto intoApex0 = enumerate_functors(g->onObjects[0], apex, b);
    auto intoApex1 = enumerate_functors(g->onObjects[1], apex, b);
    auto total = enumerate_functors(r.category, apex, b);
    int fIdx = shape->oneIndexChecked("a");
    int checked = 0;
    for (const Funct& k0 : intoApex0)
      for (const Funct& k1 : intoApex1) {
        // cocone cells point along f: k0 => k1 . G a, matching the edges
        for (const NatT& st : enumerate_natts(k0, compose_funct(k1, g->onOne[fIdx]), b)) {
          ++checked;
          // unique u : total -> apex with u . inj_A = k_A and u(edge) matching st
          int count = 0;
          for (const Funct& u : total) {
            if (!(compose_funct(u, r.cowedge.injections[0]) == k0)) continue;
            if (!(compose_funct(u, r.cowedge.injections[1]) == k1)) continue;
            bool edgesOk = true;
            for (int m = 0; m < r.category->numMors() && edgesOk; ++m) {
              auto [f, phi] = r.cowedge.morData[m];
              if (f != fIdx) continue;
              // edge (a: 0->1, phi: Ga x -> y): u must send it to
              // k1(phi) . st_x
              const Mor& mm = r.category->mor(m);
              auto [srcA, x] = r.cowedge.objData[mm.src];
              (void)srcA;
              int expected = apex->compose(k1.morMap[phi], st.comp[x]);
              if (u.morMap[m] != expected) edgesOk = false;
            }
            if (edgesOk) ++count;
          }
          CHECK(count == 1);
        }
      }
    CHECK(checked > 0);
  }
}

TEST_CASE("lax slice examples") {
  Budget b = big();
  SUBCASE("lax slice of the locally discrete arrow over 1 is the arrow") {
    auto r = lax_slice(locally_discrete(fixtures::two()), "1", b);
    CHECK(is_isomorphic(r.category, fixtures::two(), b).has_value());
  }
  SUBCASE("lax slice over locally discrete shapes degenerates to the slice") {
    for (auto [cat, obj] : {std::pair{fixtures::square_poset(), std::string("3")},
                            std::pair{fixtures::parallel_pair(), std::string("1")}}) {
      auto r = lax_slice(locally_discrete(cat), obj, b);
      auto s = slice_over(cat, obj, b);
      CHECK(is_isomorphic(r.category, s.cat, b).has_value());
    }
  }
  SUBCASE("lax slice of the two-cell shape over Q counts the 2-cell triangle") {
    auto r = lax_slice(fixtures::two_cell_shape(), "Q", b);
    // objects: idQ, u, v; morphisms include the triangle filled by mu
    CHECK(r.category->numObjects() == 3);
    CHECK(validate_fin_cat(*r.category).ok());
    int u = r.category->objIndexChecked("u");
    int v = r.category->objIndexChecked("v");
    CHECK(r.category->hom(u, v).size() == 1);  // (idP, mu)
    CHECK(r.category->hom(v, u).empty());
  }
}

TEST_CASE("weighted strict limit: conical weights give products") {
  Budget b = big();
  TwoCatPtr d2 = locally_discrete(fixtures::discrete2());
  DiagPtr weight = constant_cov(d2, fixtures::one());
  TwoFunctorToCat g;
  g.base = d2;
  g.variance = Variance::Covariant;
  g.shape = d2;
  g.onObjects = {fixtures::two(), fixtures::parallel_pair()};
  g.onOne.resize(2);
  g.onTwo.resize(2);
  g.onOne[0] = identity_funct(g.onObjects[0]);
  g.onOne[1] = identity_funct(g.onObjects[1]);
  g.onTwo[0] = identity_natt(g.onOne[0]);
  g.onTwo[1] = identity_natt(g.onOne[1]);
  WeightedLimitResult r = weighted_limit_strict(weight, share(std::move(g)), b);
  Budget b2 = big();
  auto p = product_cat(fixtures::two(), fixtures::parallel_pair(), b2);
  CHECK(is_isomorphic(r.category, p.cat, b).has_value());
}

TEST_CASE("yoneda sharp weight of the arrow") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat w = yoneda_sharp_weight(shape, b);
  CHECK(validate_2functor(w).ok());
  SquareView v(w);
  int o0 = shape->objIndexChecked("0"), o1 = shape->objIndexChecked("1");
  // at (0,1): two factorizations of a, connected: iso to the arrow
  CHECK(is_isomorphic(v.value(o0, o1), fixtures::two(), b).has_value());
  // at (A,A): contains (A,(id,id))
  CHECK(v.value(o0, o0)->objIndex(pair_id("0", pair_id("id0", "id0"))) >= 0);
  CHECK(v.value(o1, o0)->numObjects() == 0);
}

TEST_CASE("lax end as a strict weighted limit with the yoneda sharp weight") {
  Budget b = big();
  for (CatPtr shapeCat : {fixtures::two(), fixtures::parallel_pair()}) {
    TwoCatPtr shape = locally_discrete(shapeCat);
    DiagPtr weight = share(yoneda_sharp_weight(shape, b));
    for (CatPtr val : {fixtures::two()}) {
      DiagPtr t = share(constant_diagram(shape, Variance::OpFirst, val, b));
      // both sides: the weight and the diagram live over the square shape
      WeightedLimitResult lhs = weighted_limit_strict(weight, t, b);
      EndResult rhs = end_of(t, EndMode::Lax, b);
      CHECK(is_isomorphic(lhs.category, rhs.category, b).has_value());
    }
  }
}
