#include "lendkit/enumerate.hpp"

#include <algorithm>

namespace lendkit {

namespace {

// Pairs (g, f) with g.f = h, indexed by h; lets the backtrackers check a
// composition constraint exactly when its last participant gets assigned.
std::vector<std::vector<std::pair<int32_t, int32_t>>> pairs_by_composite(const FinCat& a) {
  std::vector<std::vector<std::pair<int32_t, int32_t>>> by(a.numMors());
  for (int g = 0; g < a.numMors(); ++g)
    for (int f = 0; f < a.numMors(); ++f) {
      int gf = a.compose(g, f);
      if (gf >= 0) by[gf].emplace_back(g, f);
    }
  return by;
}

}  // namespace

std::vector<Funct> enumerate_functors(const CatPtr& a, const CatPtr& b, Budget& budget) {
  std::vector<Funct> out;
  const int nObj = a->numObjects();
  const int nMor = a->numMors();
  if (b->numObjects() == 0) {
    if (nObj == 0) {
      Funct f;
      f.dom = a;
      f.cod = b;
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<int32_t> nonId;
  for (int m = 0; m < nMor; ++m)
    if (!a->isIdentity(m)) nonId.push_back(m);
  auto byComposite = pairs_by_composite(*a);

  std::vector<int32_t> objMap(nObj, -1), morMap(nMor, -1);

  auto checkAround = [&](int m) {
    for (auto [g, f] : byComposite[m]) {
      if (morMap[g] >= 0 && morMap[f] >= 0 && b->compose(morMap[g], morMap[f]) != morMap[m])
        return false;
    }
    for (int other = 0; other < nMor; ++other) {
      if (morMap[other] < 0) continue;
      int c1 = a->compose(m, other);
      if (c1 >= 0 && morMap[c1] >= 0 && b->compose(morMap[m], morMap[other]) != morMap[c1])
        return false;
      int c2 = a->compose(other, m);
      if (c2 >= 0 && morMap[c2] >= 0 && b->compose(morMap[other], morMap[m]) != morMap[c2])
        return false;
    }
    return true;
  };

  auto assignMors = [&](auto&& self, size_t k) -> void {
    if (k == nonId.size()) {
      Funct f;
      f.dom = a;
      f.cod = b;
      f.objMap = objMap;
      f.morMap = morMap;
      out.push_back(std::move(f));
      return;
    }
    int m = nonId[k];
    const Mor& mm = a->mor(m);
    for (int32_t img : b->hom(objMap[mm.src], objMap[mm.dst])) {
      budget.charge(1, "enumerate_functors");
      morMap[m] = img;
      if (checkAround(m)) self(self, k + 1);
      morMap[m] = -1;
    }
  };

  auto assignObjs = [&](auto&& self, int o) -> void {
    if (o == nObj) {
      for (int i = 0; i < nObj; ++i) morMap[a->identity(i)] = b->identity(objMap[i]);
      // Identities can themselves be composites (of inverse pairs); check them.
      bool ok = true;
      for (int i = 0; i < nObj && ok; ++i) ok = checkAround(a->identity(i));
      if (ok) assignMors(assignMors, 0);
      for (int i = 0; i < nObj; ++i) morMap[a->identity(i)] = -1;
      return;
    }
    for (int img = 0; img < b->numObjects(); ++img) {
      budget.charge(1, "enumerate_functors");
      objMap[o] = img;
      bool feasible = true;
      for (int m = 0; m < nMor && feasible; ++m) {
        const Mor& mm = a->mor(m);
        if (mm.src <= o && mm.dst <= o && objMap[mm.src] >= 0 && objMap[mm.dst] >= 0)
          feasible = !b->hom(objMap[mm.src], objMap[mm.dst]).empty();
      }
      if (feasible) self(self, o + 1);
      objMap[o] = -1;
    }
  };

  assignObjs(assignObjs, 0);
  return out;
}

std::vector<NatT> enumerate_natts(const Funct& f, const Funct& g, Budget& budget) {
  if (!same_category(f.dom, g.dom) || !same_category(f.cod, g.cod))
    throw ContractError("enumerate_natts: functors not parallel");
  const FinCat& a = *f.dom;
  const FinCat& b = *f.cod;
  std::vector<NatT> out;
  std::vector<int32_t> comp(a.numObjects(), -1);

  auto naturalSoFar = [&](int o) {
    for (int m = 0; m < a.numMors(); ++m) {
      const Mor& mm = a.mor(m);
      if (comp[mm.src] < 0 || comp[mm.dst] < 0) continue;
      if (mm.src != o && mm.dst != o) continue;
      if (b.compose(g.morMap[m], comp[mm.src]) != b.compose(comp[mm.dst], f.morMap[m]))
        return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int o) -> void {
    if (o == a.numObjects()) {
      NatT t;
      t.src = f;
      t.dst = g;
      t.comp = comp;
      out.push_back(std::move(t));
      return;
    }
    for (int32_t cand : b.hom(f.objMap[o], g.objMap[o])) {
      budget.charge(1, "enumerate_natts");
      comp[o] = cand;
      if (naturalSoFar(o)) self(self, o + 1);
      comp[o] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

FunctorCatResult functor_category(const CatPtr& a, const CatPtr& b, Budget& budget) {
  FunctorCatResult res;
  std::vector<Funct> functors = enumerate_functors(a, b, budget);

  FinCatBuilder bd;
  std::vector<std::string> objIds(functors.size());
  for (size_t i = 0; i < functors.size(); ++i) {
    objIds[i] = functors[i].canonicalId();
    bd.addObject(objIds[i]);
  }
  struct Cell {
    int32_t srcF, dstF;
    NatT t;
    std::string id;
  };
  std::vector<Cell> cells;
  for (size_t i = 0; i < functors.size(); ++i) {
    for (size_t j = 0; j < functors.size(); ++j) {
      for (NatT& t : enumerate_natts(functors[i], functors[j], budget)) {
        budget.charge(1, "functor_category morphisms");
        std::vector<std::string> comps(t.comp.size());
        for (size_t o = 0; o < t.comp.size(); ++o) comps[o] = b->mor(t.comp[o]).id;
        Cell c{static_cast<int32_t>(i), static_cast<int32_t>(j), std::move(t),
               nt_id(comps, objIds[i], objIds[j])};
        bd.addMor(c.id, objIds[i], objIds[j]);
        cells.push_back(std::move(c));
      }
    }
  }
  const FinCat& fc = bd.prepare(0);
  std::vector<int32_t> cellFinal(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) cellFinal[i] = fc.morIndexChecked(cells[i].id);

  // id lookup for composites: component ids + endpoints determine the cell
  std::unordered_map<std::string, int32_t> byId;
  for (size_t i = 0; i < cells.size(); ++i) byId[cells[i].id] = cellFinal[i];

  for (size_t i = 0; i < functors.size(); ++i) {
    NatT idT = identity_natt(functors[i]);
    std::vector<std::string> comps(idT.comp.size());
    for (size_t o = 0; o < idT.comp.size(); ++o) comps[o] = b->mor(idT.comp[o]).id;
    bd.setIdentityByIndex(fc.objIndexChecked(objIds[i]),
                          byId.at(nt_id(comps, objIds[i], objIds[i])));
  }
  for (size_t s = 0; s < cells.size(); ++s) {
    for (size_t t = 0; t < cells.size(); ++t) {
      if (cells[t].dstF != cells[s].srcF) continue;
      budget.charge(1, "functor_category composition");
      NatT comp = vcomp(cells[s].t, cells[t].t);
      std::vector<std::string> comps(comp.comp.size());
      for (size_t o = 0; o < comp.comp.size(); ++o) comps[o] = b->mor(comp.comp[o]).id;
      bd.setComposeByIndex(cellFinal[s], cellFinal[t],
                           byId.at(nt_id(comps, objIds[cells[t].srcF], objIds[cells[s].dstF])));
    }
  }
  res.cat = bd.buildShared();
  res.objFunctors.resize(functors.size());
  res.morNatts.resize(cells.size());
  for (size_t i = 0; i < functors.size(); ++i)
    res.objFunctors[res.cat->objIndexChecked(objIds[i])] = std::move(functors[i]);
  for (size_t i = 0; i < cells.size(); ++i) res.morNatts[cellFinal[i]] = std::move(cells[i].t);
  return res;
}

Funct functor_cat_action(const FunctorCatResult& from, const FunctorCatResult& to,
                         const Funct& pre, const Funct& post) {
  Funct r;
  r.dom = from.cat;
  r.cod = to.cat;
  r.objMap.resize(from.cat->numObjects());
  r.morMap.resize(from.cat->numMors());
  for (int o = 0; o < from.cat->numObjects(); ++o) {
    Funct img = compose_funct(post, compose_funct(from.objFunctors[o], pre));
    r.objMap[o] = to.cat->objIndexChecked(img.canonicalId());
  }
  for (int m = 0; m < from.cat->numMors(); ++m) {
    NatT img = whisker_left(post, whisker_right(from.morNatts[m], pre));
    r.morMap[m] = to.cat->morIndexChecked(img.canonicalId());
  }
  return r;
}

NatT functor_cat_action_2cell(const FunctorCatResult& from, const FunctorCatResult& to,
                              const Funct& pre, const Funct& post, const Funct& pre2,
                              const Funct& post2, const NatT& mu, const NatT& eta) {
  NatT r;
  r.src = functor_cat_action(from, to, pre, post);
  r.dst = functor_cat_action(from, to, pre2, post2);
  r.comp.resize(from.cat->numObjects());
  for (int o = 0; o < from.cat->numObjects(); ++o) {
    const Funct& phi = from.objFunctors[o];
    NatT cell = hcomp_natt(eta, hcomp_natt(identity_natt(phi), mu));
    r.comp[o] = to.cat->morIndexChecked(cell.canonicalId());
  }
  return r;
}

}  // namespace lendkit
