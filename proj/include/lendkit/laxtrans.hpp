#pragma once

#include "lendkit/diagram.hpp"

namespace lendkit {

using DiagPtr = std::shared_ptr<const TwoFunctorToCat>;

inline DiagPtr share(TwoFunctorToCat d) {
  return std::make_shared<const TwoFunctorToCat>(std::move(d));
}

enum class TransMode { Strict, Pseudo, Lax };

std::string trans_mode_name(TransMode m);

// A lax transformation between 2-functors over the same shape. The structure
// cell at f : A -> B points forward along f:  sigma_f : Gf . sigma_A => sigma_B . Ff.
struct LaxTransformation {
  DiagPtr source, target;
  std::vector<Funct> components;  // shape object index -> Funct F A -> G A
  std::vector<NatT> structure;    // shape 1-cell index

  std::string canonicalId() const;
};

ValidationReport validate_lax_transformation(const LaxTransformation& s, TransMode mode);

// Exhaustive enumeration in canonical order. Pseudo keeps invertible
// structure cells, strict keeps identities (equal composites on the nose).
std::vector<LaxTransformation> enumerate_lax_transformations(const DiagPtr& f, const DiagPtr& g,
                                                             TransMode mode, Budget& budget);

struct Modification {
  LaxTransformation source, target;
  std::vector<NatT> components;  // shape object index -> NatT sigma_A => tau_A

  std::string canonicalId() const;
};

ValidationReport validate_modification(const Modification& m);

std::vector<Modification> enumerate_modifications(const LaxTransformation& s,
                                                  const LaxTransformation& t, Budget& budget);

// The hom-category Lax<A,Cat>(F, G): transformations as objects,
// modifications as morphisms, composed componentwise.
struct LaxHomResult {
  CatPtr cat;
  std::vector<LaxTransformation> objTransformations;  // by object index
  std::vector<Modification> morModifications;         // by morphism index
};

LaxHomResult lax_hom_category(const DiagPtr& f, const DiagPtr& g, TransMode mode, Budget& budget);

}  // namespace lendkit
