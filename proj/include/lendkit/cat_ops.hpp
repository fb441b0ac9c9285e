#pragma once

#include "lendkit/funct.hpp"

namespace lendkit {

struct ProductResult {
  CatPtr cat;
  std::vector<Funct> projections;
  // Final-index decompositions into factor cells.
  std::vector<std::vector<int32_t>> objComponents;
  std::vector<std::vector<int32_t>> morComponents;

  // Final indices of the tuple assembled from factor cells.
  int objOf(const std::vector<int32_t>& parts) const;
  int morOf(const std::vector<int32_t>& parts) const;
};

// Indexed product of categories in the given factor order; the empty product
// is the terminal category.
ProductResult product_cat_indexed(const std::vector<CatPtr>& factors, Budget& budget);
ProductResult product_cat(const CatPtr& c, const CatPtr& d, Budget& budget);

// Pairing <f1,...,fk> : X -> prod(factors) of functors with common domain.
Funct pair_into_product(const ProductResult& prod, const std::vector<Funct>& legs);

CatPtr terminal_cat();
CatPtr empty_cat();

CatPtr opposite_cat(const CatPtr& c);

struct SliceResult {
  CatPtr cat;
  Funct projection;                     // forgetful: (x -> b) |-> x
  std::vector<int32_t> objUnderlying;   // slice object -> morphism of base into obj
  std::vector<int32_t> morUnderlying;   // slice morphism -> base morphism
};
SliceResult slice_over(const CatPtr& b, const std::string& objId, Budget& budget);

struct SubcatResult {
  CatPtr cat;
  Funct inclusion;
};
// Full subcategory on the given object indices (ids preserved).
SubcatResult full_subcategory(const CatPtr& c, const std::vector<int32_t>& objs);

struct InserterResult {
  CatPtr cat;
  Funct projection;  // (A, phi) |-> A
  NatT inserted;     // f.projection => g.projection with component phi at (A, phi)
  std::vector<std::pair<int32_t, int32_t>> objData;  // (domain object, phi in codomain)
  std::vector<int32_t> morUnderlying;
};
// Universal object with a 2-cell between parallel functors f, g : A -> B;
// objects are pairs (A, phi : fA -> gA).
InserterResult inserter(const Funct& f, const Funct& g, Budget& budget);

// Full subcategory where the two parallel transformations agree.
SubcatResult equifier(const NatT& alpha, const NatT& beta);

// Brute-force binary product search: a limit cone plus the verification that
// every competing cone factors uniquely.
struct BinaryProductWitness {
  int32_t apex;
  int32_t proj1, proj2;
};
std::optional<BinaryProductWitness> check_binary_product(const FinCat& c, int x, int y);

}  // namespace lendkit
