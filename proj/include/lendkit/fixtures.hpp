#pragma once

#include "lendkit/fincat.hpp"
#include "lendkit/twocat.hpp"

namespace lendkit::fixtures {

// The standard small categories the tests and the default corpus lean on.
// All of them are built once and shared.

CatPtr one();           // terminal: object *, morphism id*
CatPtr two();           // the arrow category: 0 -> 1
CatPtr discrete2();     // two objects, identities only
CatPtr parallel_pair(); // u, v : 0 -> 1
CatPtr square_poset();  // commuting square: 0 < a, 0 < b, a < 3, b < 3
CatPtr iso_pair();      // contractible groupoid on two objects
CatPtr asym3();         // three objects with a non-reversible arrow pattern
CatPtr with_products(); // poset with binary meets: used for product checks

// Two parallel 1-cells u, v : P -> Q with one non-identity 2-cell u => v.
TwoCatPtr two_cell_shape();

}  // namespace lendkit::fixtures
