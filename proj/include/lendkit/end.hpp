#pragma once

#include "lendkit/laxtrans.hpp"

namespace lendkit {

enum class EndMode { Strict, Pseudo, Lax, Oplax };

std::string end_mode_name(EndMode m);
EndMode end_mode_from_name(const std::string& s);

// One object of an end: families {x_A} and {x_f} satisfying the unit,
// composition, and 2-cell axioms. perOne holds, for f : A -> B,
//   lax/pseudo/strict:  x_f : T(1,f) x_A -> T(f,1) x_B   in T(A,B)
//   oplax:              x_f : T(f,1) x_B -> T(1,f) x_A
struct WedgeFamily {
  std::vector<int32_t> perObject;
  std::vector<int32_t> perOne;
};

// A wedge from an apex category into the diagram; pointwise each apex object
// induces a WedgeFamily and each apex morphism a family morphism.
struct LaxWedge {
  CatPtr apex;
  std::vector<Funct> components;  // base object A -> apex -> T(A,A)
  std::vector<NatT> structure;    // base 1-cell f, oriented by the mode
};

struct EndResult {
  EndMode mode = EndMode::Lax;
  DiagPtr diagram;
  CatPtr category;
  LaxWedge wedge;
  std::vector<WedgeFamily> families;                // by object index
  std::vector<std::vector<int32_t>> morComponents;  // by morphism index: gamma_A per base object

  std::string familyObjectId(const WedgeFamily& fam) const;
};

// Direct enumeration of the explicit presentation.
EndResult end_of(const DiagPtr& t, EndMode mode, Budget& budget);

ValidationReport validate_wedge(const DiagPtr& t, EndMode mode, const LaxWedge& w);

// The unique u with (universal wedge) . u = sigma.
Funct factorize_wedge(const EndResult& e, const LaxWedge& sigma);

// The unique beta : u => v with lambda * beta = gamma, where gamma is given
// per base object as a modification component lambda_A u => lambda_A v.
NatT factorize_modification(const EndResult& e, const Funct& u, const Funct& v,
                            const std::vector<NatT>& gamma);

// end over the A-slot of T : A^op x A x B -> Cat, giving a diagram over B.
// The per-object end results and restricted square diagrams are kept so
// callers can reach inside the pointwise ends (family data, projections).
struct PartialEndResult {
  TwoFunctorToCat diagram;            // covariant over the extra 2-category
  std::vector<EndResult> ends;        // by extra object index
  std::vector<DiagPtr> restricted;    // the square diagram at each extra object
};

PartialEndResult partial_end(const DiagPtr& t, EndMode mode, Budget& budget);

}  // namespace lendkit
