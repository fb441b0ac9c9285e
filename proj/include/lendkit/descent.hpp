#pragma once

#include "lendkit/end.hpp"

namespace lendkit {

// Three objects, six functors, five strict equalities:
//   i.v = 1 = i.w,  r.v = s.v,  t.w = s.w,  r.w = t.v
struct CoherenceData {
  CatPtr x1, x2, x3;
  Funct v, w;  // x1 -> x2
  Funct i;     // x2 -> x1
  Funct r, s, t;  // x2 -> x3
};

ValidationReport validate_coherence(const CoherenceData& cd);

// The universal (x, xi : v.x => w.x) with the two pasting equalities;
// built from one inserter and two equifiers.
struct DescentObject {
  CatPtr category;
  Funct x;   // category -> x1
  NatT xi;   // v.x => w.x
};

DescentObject descent_object(const CoherenceData& cd, Budget& budget);

// X1 = prod_A T(A,A); X2 = prod_{A,B} [hom(A,B), T(A,B)];
// X3 = prod_{A,B,C} [hom(B,C) x hom(A,B), T(A,C)], with the six canonical
// functors assembled from transposes, projections, and composition.
struct CoherenceFromDiagram {
  CoherenceData data;
  // product bookkeeping needed to read wedges back off the descent object
  std::vector<Funct> x1Projections;                    // base object A -> X1 -> T(A,A)
  std::vector<std::vector<int32_t>> x2FactorOf;        // (A,B) -> index in X2 factor list
  std::vector<Funct> x2Projections;                    // factor index -> X2 -> [hom,T]
  std::vector<std::vector<Funct>> x2FactorFunctors;    // factor index -> FC object functors
  std::vector<std::vector<NatT>> x2FactorNatts;        // factor index -> FC morphism natts
};

CoherenceFromDiagram coherence_from_diagram(const DiagPtr& t, Budget& budget);

// The full second route: coherence data, descent object, wedge extraction.
// Only isomorphic (not equal) to end_of: the two constructions name their
// cells differently.
struct DescentEnd {
  DiagPtr diagram;
  CatPtr category;
  LaxWedge wedge;  // lax orientation
};

DescentEnd lax_end_via_descent(const DiagPtr& t, Budget& budget);

}  // namespace lendkit
