#include "doctest.h"

#include "lendkit/descent.hpp"
#include "lendkit/fixtures.hpp"
#include "lendkit/iso.hpp"

using namespace lendkit;

namespace {
Budget big() { return Budget(200000000); }
}

TEST_CASE("trivial coherence data on terminal categories validates") {
  CoherenceData cd;
  cd.x1 = fixtures::one();
  cd.x2 = fixtures::one();
  cd.x3 = fixtures::one();
  Funct id = identity_funct(fixtures::one());
  cd.v = cd.w = cd.i = cd.r = cd.s = cd.t = id;
  CHECK(validate_coherence(cd).ok());
  Budget b = big();
  DescentObject d = descent_object(cd, b);
  CHECK(is_isomorphic(d.category, fixtures::one(), b).has_value());
}

TEST_CASE("broken coherence data is reported with the equality name") {
  CoherenceData cd;
  cd.x1 = fixtures::two();
  cd.x2 = fixtures::two();
  cd.x3 = fixtures::one();
  Funct id2 = identity_funct(fixtures::two());
  Budget b = big();
  auto toOne = enumerate_functors(fixtures::two(), fixtures::one(), b);
  REQUIRE(toOne.size() == 1);
  // i.v != id: make v constant at object 0
  auto endos = enumerate_functors(fixtures::two(), fixtures::two(), b);
  Funct c0 = endos.front();  // constant 0 comes first in canonical order
  cd.v = c0;
  cd.w = id2;
  cd.i = id2;
  cd.r = toOne[0];
  cd.s = toOne[0];
  cd.t = toOne[0];
  ValidationReport rep = validate_coherence(cd);
  CHECK(!rep.ok());
  bool mentionsDelta = false;
  for (const auto& p : rep.problems)
    if (p.find("delta") != std::string::npos) mentionsDelta = true;
  CHECK(mentionsDelta);
}

TEST_CASE("coherence from a diagram over the terminal shape") {
  Budget b = big();
  DiagPtr d = share(constant_diagram(terminal_2cat(), Variance::OpFirst,
                                     fixtures::parallel_pair(), b));
  CoherenceFromDiagram cfd = coherence_from_diagram(d, b);
  CHECK(validate_coherence(cfd.data).ok());
  // X1 = T(*,*), X2 iso to [1, T], X3 iso to [1x1, T]
  CHECK(is_isomorphic(cfd.data.x1, fixtures::parallel_pair(), b).has_value());
  CHECK(is_isomorphic(cfd.data.x2, fixtures::parallel_pair(), b).has_value());
  CHECK(is_isomorphic(cfd.data.x3, fixtures::parallel_pair(), b).has_value());
}

TEST_CASE("coherence from the constant arrow diagram over the arrow shape") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr d = share(constant_diagram(shape, Variance::OpFirst, fixtures::two(), b));
  CoherenceFromDiagram cfd = coherence_from_diagram(d, b);
  CHECK(validate_coherence(cfd.data).ok());
  // X1 = two x two: 4 objects, 9 morphisms
  CHECK(cfd.data.x1->numObjects() == 4);
  CHECK(cfd.data.x1->numMors() == 9);
}

TEST_CASE("descent route agrees with direct enumeration on constant diagrams") {
  Budget b = big();
  for (auto [shapeCat, valueCat] : {std::pair{fixtures::two(), fixtures::two()},
                                    std::pair{fixtures::two(), fixtures::parallel_pair()},
                                    std::pair{fixtures::parallel_pair(), fixtures::two()}}) {
    TwoCatPtr shape = locally_discrete(shapeCat);
    DiagPtr d = share(constant_diagram(shape, Variance::OpFirst, valueCat, b));
    DescentEnd viaDescent = lax_end_via_descent(d, b);
    EndResult direct = end_of(d, EndMode::Lax, b);
    CHECK(is_isomorphic(viaDescent.category, direct.category, b).has_value());
    CHECK(validate_wedge(d, EndMode::Lax, viaDescent.wedge).ok());
  }
}

TEST_CASE("descent route agrees on the hom diagram of the arrow") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr d = share(hom_2functor(shape, b));
  DescentEnd viaDescent = lax_end_via_descent(d, b);
  EndResult direct = end_of(d, EndMode::Lax, b);
  CHECK(is_isomorphic(viaDescent.category, direct.category, b).has_value());
  CHECK(validate_wedge(d, EndMode::Lax, viaDescent.wedge).ok());
}

TEST_CASE("descent route agrees over the two-cell shape") {
  Budget b = big();
  TwoCatPtr shape = fixtures::two_cell_shape();
  DiagPtr d = share(constant_diagram(shape, Variance::OpFirst, fixtures::two(), b));
  DescentEnd viaDescent = lax_end_via_descent(d, b);
  EndResult direct = end_of(d, EndMode::Lax, b);
  CHECK(is_isomorphic(viaDescent.category, direct.category, b).has_value());
  CHECK(validate_wedge(d, EndMode::Lax, viaDescent.wedge).ok());
}

TEST_CASE("descent object satisfies the 1-dimensional universal property") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr d = share(constant_diagram(shape, Variance::OpFirst, fixtures::two(), b));
  CoherenceFromDiagram cfd = coherence_from_diagram(d, b);
  DescentObject dob = descent_object(cfd.data, b);
  // competing triples (y : Y -> X1, eta : v y => w y) satisfying both pastings
  for (CatPtr apex : {fixtures::one(), fixtures::two()}) {
    auto ys = enumerate_functors(apex, cfd.data.x1, b);
    auto intoD = enumerate_functors(apex, dob.category, b);
    int checked = 0;
    for (const Funct& y : ys) {
      for (const NatT& eta :
           enumerate_natts(compose_funct(cfd.data.v, y), compose_funct(cfd.data.w, y), b)) {
        // the two pasting equalities for (y, eta)
        NatT smallLhs = whisker_left(cfd.data.i, eta);
        if (!(smallLhs == identity_natt(y))) continue;
        NatT largeLhs = vcomp(whisker_left(cfd.data.t, eta), whisker_left(cfd.data.r, eta));
        NatT largeRhs = whisker_left(cfd.data.s, eta);
        if (!(largeLhs == largeRhs)) continue;
        ++checked;
        int count = 0;
        for (const Funct& u : intoD) {
          if (!(compose_funct(dob.x, u) == y)) continue;
          if (whisker_right(dob.xi, u) == eta) ++count;
        }
        CHECK(count == 1);
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("equifier order does not change the result up to isomorphism") {
  Budget b = big();
  TwoCatPtr shape = locally_discrete(fixtures::two());
  DiagPtr d = share(constant_diagram(shape, Variance::OpFirst, fixtures::two(), b));
  CoherenceFromDiagram cfd = coherence_from_diagram(d, b);
  DescentObject d1 = descent_object(cfd.data, b);
  // swapped order: equify the large pasting first, then the small one
  InserterResult ins = inserter(cfd.data.v, cfd.data.w, b);
  NatT zeta = ins.inserted;
  NatT largeL = vcomp(whisker_left(cfd.data.t, zeta), whisker_left(cfd.data.r, zeta));
  NatT largeR = whisker_left(cfd.data.s, zeta);
  SubcatResult eqL = equifier(largeL, largeR);
  Funct a1 = compose_funct(ins.projection, eqL.inclusion);
  NatT zeta1 = whisker_right(zeta, eqL.inclusion);
  NatT small = whisker_left(cfd.data.i, zeta1);
  SubcatResult eqS = equifier(small, identity_natt(a1));
  CHECK(is_isomorphic(d1.category, eqS.cat, b).has_value());
}
