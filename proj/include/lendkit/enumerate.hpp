#pragma once

#include "lendkit/cat_ops.hpp"

namespace lendkit {

// Exhaustive, duplicate-free, canonically ordered (object images first, then
// morphism images, both lexicographic over sorted cells).
std::vector<Funct> enumerate_functors(const CatPtr& a, const CatPtr& b, Budget& budget);

// All natural transformations f => g, ordered lexicographically by component.
std::vector<NatT> enumerate_natts(const Funct& f, const Funct& g, Budget& budget);

struct FunctorCatResult {
  CatPtr cat;
  std::vector<Funct> objFunctors;  // by object index
  std::vector<NatT> morNatts;      // by morphism index
};

// The category [a, b]: functors as objects, natural transformations as
// morphisms, composed vertically.
FunctorCatResult functor_category(const CatPtr& a, const CatPtr& b, Budget& budget);

// Functor [a,b] -> [a2,b2] given by phi |-> post . phi . pre
// (pre : a2 -> a, post : b -> b2); the workhorse behind power diagrams.
Funct functor_cat_action(const FunctorCatResult& from, const FunctorCatResult& to,
                         const Funct& pre, const Funct& post);

// Natural transformation action(pre, post) => action(pre2, post2) induced by
// mu : pre => pre2 and eta : post => post2; component at phi is the
// horizontal composite eta * id_phi * mu.
NatT functor_cat_action_2cell(const FunctorCatResult& from, const FunctorCatResult& to,
                              const Funct& pre, const Funct& post, const Funct& pre2,
                              const Funct& post2, const NatT& mu, const NatT& eta);

}  // namespace lendkit
