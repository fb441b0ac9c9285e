#pragma once

#include "lendkit/funct.hpp"

namespace lendkit {

struct IsoWitness {
  Funct to, from;  // mutually inverse
};

// Backtracking search for an isomorphism of categories, pruned by
// (in-degree, out-degree, endomorphism-count, identity-ness) profiles.
// Deterministic: the first witness in canonical candidate order.
std::optional<IsoWitness> is_isomorphic(const CatPtr& c, const CatPtr& d, Budget& budget);

struct EquivWitness {
  Funct to, from;
  NatT unitIso;    // id_c => from . to
  NatT counitIso;  // to . from => id_d
};

struct SkeletonResult {
  CatPtr cat;
  Funct inclusion;      // skeleton -> original
  Funct retraction;     // original -> skeleton (conjugation by chosen isos)
  std::vector<int32_t> repOf;    // object -> chosen representative object
  std::vector<int32_t> isoToRep; // object -> chosen iso obj -> rep
};

// One object per isomorphism class, the least id winning.
SkeletonResult skeleton(const CatPtr& c, Budget& budget);

// Equivalence via isomorphism of skeletons, witness lifted back.
std::optional<EquivWitness> is_equivalent(const CatPtr& c, const CatPtr& d, Budget& budget);

}  // namespace lendkit
