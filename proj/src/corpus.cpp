#include "lendkit/corpus.hpp"

#include <algorithm>

#include "lendkit/enumerate.hpp"
#include "lendkit/fixtures.hpp"

namespace lendkit {

namespace {

size_t pick(std::mt19937_64& rng, size_t n) { return static_cast<size_t>(rng() % n); }

template <typename T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[pick(rng, i)]);
}

}  // namespace

std::optional<TwoFunctorToCat> random_covariant_diagram(const TwoCatPtr& shape,
                                                        const std::vector<CatPtr>& palette,
                                                        std::mt19937_64& rng, Budget& budget) {
  const Fin2Cat& s = *shape;
  TwoFunctorToCat t;
  t.base = shape;
  t.variance = Variance::Covariant;
  t.shape = shape;
  t.onObjects.resize(s.numObjects());
  for (int o = 0; o < s.numObjects(); ++o) t.onObjects[o] = palette[pick(rng, palette.size())];
  t.onOne.resize(s.numOne());
  t.onTwo.resize(s.numTwo());

  std::vector<int32_t> nonId;
  for (int f = 0; f < s.numOne(); ++f) {
    if (s.isIdentityOne(f))
      t.onOne[f] = identity_funct(t.onObjects[s.one(f).src]);
    else
      nonId.push_back(f);
  }
  std::vector<char> have(s.numOne(), 0);
  for (int o = 0; o < s.numObjects(); ++o) have[s.idOne(o)] = 1;

  auto composedOk = [&](int f) {
    for (int g = 0; g < s.numOne(); ++g)
      for (int h = 0; h < s.numOne(); ++h) {
        int gh = s.composeOne(g, h);
        if (gh < 0) continue;
        if (g != f && h != f && gh != f) continue;
        if (!have[g] || !have[h] || !have[gh]) continue;
        if (!(compose_funct(t.onOne[g], t.onOne[h]) == t.onOne[gh])) return false;
      }
    return true;
  };

  auto assign = [&](auto&& self, size_t k) -> bool {
    if (k == nonId.size()) return true;
    int f = nonId[k];
    const OneCell& fc = s.one(f);
    std::vector<Funct> cands =
        enumerate_functors(t.onObjects[fc.src], t.onObjects[fc.dst], budget);
    seeded_shuffle(cands, rng);
    for (Funct& cand : cands) {
      budget.charge(1, "random diagram 1-cells");
      t.onOne[f] = std::move(cand);
      have[f] = 1;
      if (composedOk(f) && self(self, k + 1)) return true;
      have[f] = 0;
    }
    t.onOne[f] = Funct{};
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;

  // 2-cells: identities forced; the rest need a natural transformation
  // between the assigned endpoints (no further constraints at this size:
  // nontrivial 2-cells in the fixture shapes are never composable).
  for (int u = 0; u < s.numTwo(); ++u) {
    if (s.isIdentityTwo(u)) {
      t.onTwo[u] = identity_natt(t.onOne[s.two(u).src]);
      continue;
    }
    std::vector<NatT> cands = enumerate_natts(t.onOne[s.two(u).src], t.onOne[s.two(u).dst], budget);
    if (cands.empty()) return std::nullopt;
    t.onTwo[u] = cands[pick(rng, cands.size())];
  }
  if (!validate_2functor(t).ok()) return std::nullopt;
  return t;
}

TwoFunctorToCat representable_presheaf(const CatPtr& a, const std::string& objId, Budget& budget) {
  TwoCatPtr opShape = locally_discrete(opposite_cat(a));
  TwoCatPtr ld = locally_discrete(a);
  TwoFunctorToCat hom = hom_2functor(ld, budget);
  SquareView v(hom);
  int c = a->objIndexChecked(objId);
  const Fin2Cat& base = *ld;
  TwoFunctorToCat r;
  r.base = opShape;
  r.variance = Variance::Covariant;
  r.shape = opShape;
  r.onObjects.resize(base.numObjects());
  r.onOne.resize(base.numOne());
  r.onTwo.resize(base.numTwo());
  for (int x = 0; x < base.numObjects(); ++x) r.onObjects[x] = v.value(x, c);
  for (int f = 0; f < base.numOne(); ++f) r.onOne[f] = v.act(f, base.idOne(c));
  for (int u = 0; u < base.numTwo(); ++u) r.onTwo[u] = identity_natt(r.onOne[base.two(u).src]);
  return r;
}

Corpus generate_corpus(uint64_t seed, int sizeBudget, Budget& budget) {
  Corpus corpus;
  corpus.seed = seed;
  std::mt19937_64 rng(seed);

  struct ShapeSpec {
    std::string name;
    TwoCatPtr shape;
    std::vector<CatPtr> palette;  // random diagram values
    int randomSquares;
    int randomPairs;
    CatPtr constValue;  // value of the fixed constant square diagram
  };
  CatPtr one = fixtures::one();
  CatPtr two = fixtures::two();
  // tiny palette entries keep the product-heavy routes (descent, weights)
  // within budget on the bigger shapes
  std::vector<CatPtr> rich = {one, two, fixtures::parallel_pair(), fixtures::iso_pair()};
  std::vector<CatPtr> lean = {one, one, two};

  // the 4-object shape gets a terminal-valued constant: an arrow-valued one
  // sends the X3 product of the coherence construction past any budget
  std::vector<ShapeSpec> specs = {
      {"terminal", terminal_2cat(), rich, 1, 1, two},
      {"arrow", locally_discrete(fixtures::two()), rich, 2, 2, two},
      {"discrete-pair", locally_discrete(fixtures::discrete2()), rich, 1, 2, two},
      {"parallel-pair", locally_discrete(fixtures::parallel_pair()), lean, 2, 2, two},
      {"square-poset", locally_discrete(fixtures::square_poset()), lean, 1, 1, one},
      {"two-cell", fixtures::two_cell_shape(), lean, 1, 1, two},
  };

  int extraScale = std::max(0, sizeBudget);
  for (ShapeSpec& spec : specs) {
    CorpusEntry entry;
    entry.name = spec.name;
    entry.shape = spec.shape;

    // fixed diagrams: a constant square diagram and the hom diagram
    entry.squares.push_back(
        {"const", share(constant_diagram(spec.shape, Variance::OpFirst, spec.constValue, budget))});
    entry.squares.push_back({"hom", share(hom_2functor(spec.shape, budget))});

    // random covariant pairs (weights and diagrams)
    int pairGoal = spec.randomPairs + (extraScale > 1 ? 1 : 0);
    int made = 0, attempts = 0;
    while (made < pairGoal && attempts < 40) {
      ++attempts;
      auto f = random_covariant_diagram(spec.shape, spec.palette, rng, budget);
      auto g = random_covariant_diagram(spec.shape, spec.palette, rng, budget);
      if (!f || !g) continue;
      entry.covariantPairs.push_back({spec.name + "-pair-" + std::to_string(made),
                                      share(std::move(*f)), share(std::move(*g))});
      ++made;
    }

    // random square diagrams: genuinely random covariant diagrams over the
    // square shape, reinterpreted
    TwoCatPtr sq = square_shape(spec.shape, budget);
    int sqGoal = spec.randomSquares + (extraScale > 1 ? 1 : 0);
    made = 0;
    attempts = 0;
    while (made < sqGoal && attempts < 40) {
      ++attempts;
      auto d = random_covariant_diagram(sq, spec.palette, rng, budget);
      if (!d) continue;
      entry.squares.push_back({spec.name + "-random-" + std::to_string(made),
                               share(reinterpret_as_square(*d, spec.shape, budget))});
      ++made;
    }

    // a power diagram from the first covariant pair ties the two families
    if (!entry.covariantPairs.empty()) {
      const CorpusPair& p = entry.covariantPairs.front();
      entry.squares.push_back(
          {spec.name + "-power", share(power_diagram(*p.weight, *p.diagram, budget))});
    }
    corpus.entries.push_back(std::move(entry));
  }
  return corpus;
}

}  // namespace lendkit
