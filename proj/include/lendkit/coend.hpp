#pragma once

#include "lendkit/end.hpp"

namespace lendkit {

// Total category of a square diagram over a locally discrete base:
// objects (A, x in T(A,A)); morphisms (A,x) -> (B,y) are pairs
// (f : A -> B, phi : T(1,f)x -> T(f,1)y), composed by
// (g,psi).(f,phi) = (g.f, T(f,1)psi . T(1,g)phi).
struct CowedgeResult {
  DiagPtr diagram;
  CatPtr category;
  std::vector<Funct> injections;                        // base object A -> T(A,A) -> total
  std::vector<std::pair<int32_t, int32_t>> objData;     // (base object, value object)
  std::vector<std::pair<int32_t, int32_t>> morData;     // (base 1-cell f, phi)

  std::string pairObjectId(int baseObj, int valueObj) const;
};

CowedgeResult lax_coend(const DiagPtr& t, Budget& budget);

}  // namespace lendkit
