#include "doctest.h"

#include "lendkit/enumerate.hpp"
#include "lendkit/fixtures.hpp"
#include "lendkit/iso.hpp"

using namespace lendkit;

namespace {
Budget big() { return Budget(50000000); }
}

TEST_CASE("functors from the terminal category pick objects") {
  Budget b = big();
  for (CatPtr c : {fixtures::two(), fixtures::square_poset(), fixtures::parallel_pair()}) {
    auto fs = enumerate_functors(fixtures::one(), c, b);
    CHECK(static_cast<int>(fs.size()) == c->numObjects());
    for (const Funct& f : fs) CHECK(is_funct(f));
  }
}

TEST_CASE("three endofunctors of the arrow category") {
  Budget b = big();
  auto fs = enumerate_functors(fixtures::two(), fixtures::two(), b);
  CHECK(fs.size() == 3);  // const0, const1, identity
}

TEST_CASE("functors into the empty category") {
  Budget b = big();
  CHECK(enumerate_functors(fixtures::two(), empty_cat(), b).empty());
  CHECK(enumerate_functors(empty_cat(), empty_cat(), b).size() == 1);
}

TEST_CASE("functor enumeration is duplicate-free and canonically ordered") {
  Budget b = big();
  auto fs = enumerate_functors(fixtures::parallel_pair(), fixtures::two(), b);
  for (size_t i = 0; i + 1 < fs.size(); ++i) {
    CHECK((fs[i].objMap < fs[i + 1].objMap ||
           (fs[i].objMap == fs[i + 1].objMap && fs[i].morMap < fs[i + 1].morMap)));
  }
}

TEST_CASE("functor category of the arrow in itself: 3 objects, 6 morphisms") {
  Budget b = big();
  auto fc = functor_category(fixtures::two(), fixtures::two(), b);
  CHECK(fc.cat->numObjects() == 3);
  CHECK(fc.cat->numMors() == 6);
  CHECK(validate_fin_cat(*fc.cat).ok());
}

TEST_CASE("functor category counts match the double enumeration oracle") {
  Budget b = big();
  for (auto [a, c] : {std::pair{fixtures::two(), fixtures::parallel_pair()},
                      std::pair{fixtures::parallel_pair(), fixtures::two()},
                      std::pair{fixtures::discrete2(), fixtures::square_poset()}}) {
    auto fc = functor_category(a, c, b);
    auto fs = enumerate_functors(a, c, b);
    CHECK(fc.cat->numObjects() == static_cast<int>(fs.size()));
    size_t total = 0;
    for (const Funct& f : fs)
      for (const Funct& g : fs) total += enumerate_natts(f, g, b).size();
    CHECK(fc.cat->numMors() == static_cast<int>(total));
    CHECK(validate_fin_cat(*fc.cat).ok());
  }
}

TEST_CASE("functor category degenerate shapes") {
  Budget b = big();
  SUBCASE("[1, B] iso to B") {
    auto fc = functor_category(fixtures::one(), fixtures::square_poset(), b);
    CHECK(is_isomorphic(fc.cat, fixtures::square_poset(), b).has_value());
  }
  SUBCASE("[A, 1] iso to 1") {
    auto fc = functor_category(fixtures::square_poset(), fixtures::one(), b);
    CHECK(is_isomorphic(fc.cat, fixtures::one(), b).has_value());
  }
}

TEST_CASE("functor category action transports composition strictly") {
  Budget b = big();
  CatPtr two = fixtures::two();
  auto fc = functor_category(two, two, b);
  Funct id = identity_funct(two);
  Funct act = functor_cat_action(fc, fc, id, id);
  CHECK(act == identity_funct(fc.cat));
}
