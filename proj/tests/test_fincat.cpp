#include "doctest.h"

#include "lendkit/fincat.hpp"
#include "lendkit/fixtures.hpp"

using namespace lendkit;

TEST_CASE("fixture categories validate") {
  CHECK(validate_fin_cat(*fixtures::one()).ok());
  CHECK(validate_fin_cat(*fixtures::two()).ok());
  CHECK(validate_fin_cat(*fixtures::discrete2()).ok());
  CHECK(validate_fin_cat(*fixtures::parallel_pair()).ok());
  CHECK(validate_fin_cat(*fixtures::square_poset()).ok());
  CHECK(validate_fin_cat(*fixtures::iso_pair()).ok());
  CHECK(validate_fin_cat(*fixtures::asym3()).ok());
}

TEST_CASE("arrow category has the expected table") {
  CatPtr two = fixtures::two();
  CHECK(two->numObjects() == 2);
  CHECK(two->numMors() == 3);
  int a = two->morIndexChecked("a");
  int id0 = two->morIndexChecked("id0");
  int id1 = two->morIndexChecked("id1");
  CHECK(two->compose(a, id0) == a);
  CHECK(two->compose(id1, a) == a);
  CHECK(two->compose(a, id1) == -1);
  CHECK(two->isIdentity(id0));
  CHECK(!two->isIdentity(a));
}

TEST_CASE("broken unit law is reported with the offending ids") {
  FinCatBuilder bb;
  bb.addObject("0");
  bb.addObject("1");
  bb.addMor("id0", "0", "0");
  bb.addMor("id1", "1", "1");
  bb.addMor("a", "0", "1");
  bb.addMor("b", "0", "1");
  bb.setIdentity("0", "id0");
  bb.setIdentity("1", "id1");
  bb.setCompose("id0", "id0", "id0");
  bb.setCompose("id1", "id1", "id1");
  bb.setCompose("a", "id0", "b");  // unit violation
  bb.setCompose("b", "id0", "b");
  bb.setCompose("id1", "a", "a");
  bb.setCompose("id1", "b", "b");
  ValidationReport rep = validate_fin_cat(bb.build());
  CHECK(!rep.ok());
  bool mentionsUnit = false;
  for (const auto& p : rep.problems)
    if (p.find("unit law") != std::string::npos && p.find("a") != std::string::npos)
      mentionsUnit = true;
  CHECK(mentionsUnit);
}

TEST_CASE("missing composite is reported as totality violation") {
  FinCatBuilder b;
  b.addObject("0");
  b.addObject("1");
  b.addMor("id0", "0", "0");
  b.addMor("id1", "1", "1");
  b.addMor("a", "0", "1");
  b.setIdentity("0", "id0");
  b.setIdentity("1", "id1");
  b.setCompose("id0", "id0", "id0");
  b.setCompose("id1", "id1", "id1");
  b.setCompose("a", "id0", "a");
  // id1 . a deliberately missing
  ValidationReport rep = validate_fin_cat(b.build());
  CHECK(!rep.ok());
  bool mentions = false;
  for (const auto& p : rep.problems)
    if (p.find("totality") != std::string::npos) mentions = true;
  CHECK(mentions);
}

TEST_CASE("structural garbage throws InputError") {
  FinCatBuilder b;
  b.addObject("0");
  b.addMor("f", "0", "missing");
  CHECK_THROWS_AS(b.build(), InputError);
}

TEST_CASE("invertibility detection") {
  CatPtr iso = fixtures::iso_pair();
  int f = iso->morIndexChecked("f");
  CHECK(iso->isInvertible(f));
  CHECK(iso->inverseOf(f) == iso->morIndexChecked("g"));
  CatPtr two = fixtures::two();
  CHECK(!two->isInvertible(two->morIndexChecked("a")));
}
