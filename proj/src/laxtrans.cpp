#include "lendkit/laxtrans.hpp"

namespace lendkit {

std::string trans_mode_name(TransMode m) {
  switch (m) {
    case TransMode::Strict: return "strict";
    case TransMode::Pseudo: return "pseudo";
    case TransMode::Lax: return "lax";
  }
  return "lax";
}

std::string LaxTransformation::canonicalId() const {
  const Fin2Cat& s = *source->shape;
  std::vector<std::pair<std::string, std::string>> objPart, onePart;
  for (int o = 0; o < s.numObjects(); ++o)
    objPart.emplace_back(s.objectId(o), components[o].canonicalId());
  for (int f = 0; f < s.numOne(); ++f) {
    if (s.isIdentityOne(f)) continue;
    std::vector<std::string> comps(structure[f].comp.size());
    for (size_t i = 0; i < comps.size(); ++i)
      comps[i] = structure[f].src.cod->mor(structure[f].comp[i]).id;
    onePart.emplace_back(s.one(f).id, bracket_id(comps));
  }
  return family_id(objPart, onePart);
}

std::string Modification::canonicalId() const {
  const Fin2Cat& s = *source.source->shape;
  std::vector<std::pair<std::string, std::string>> comps;
  for (int o = 0; o < s.numObjects(); ++o) {
    std::vector<std::string> cc(components[o].comp.size());
    for (size_t i = 0; i < cc.size(); ++i)
      cc[i] = components[o].src.cod->mor(components[o].comp[i]).id;
    comps.emplace_back(s.objectId(o), bracket_id(cc));
  }
  return family_mor_id(comps, source.canonicalId(), target.canonicalId());
}

namespace {

// sigma_(g.f) must equal the pasting (sigma_g * Ff) . (Gg * sigma_f).
NatT pasted_structure(const TwoFunctorToCat& F, const TwoFunctorToCat& G,
                      const LaxTransformation& s, int g, int f) {
  return vcomp(whisker_right(s.structure[g], F.onOne[f]),
               whisker_left(G.onOne[g], s.structure[f]));
}

}  // namespace

ValidationReport validate_lax_transformation(const LaxTransformation& s, TransMode mode) {
  ValidationReport rep;
  const TwoFunctorToCat& F = *s.source;
  const TwoFunctorToCat& G = *s.target;
  if (!(*F.shape == *G.shape)) {
    rep.add("lax transformation: source/target shapes differ");
    return rep;
  }
  const Fin2Cat& sh = *F.shape;
  if (static_cast<int>(s.components.size()) != sh.numObjects() ||
      static_cast<int>(s.structure.size()) != sh.numOne()) {
    rep.add("lax transformation: table sizes do not match the shape");
    return rep;
  }
  for (int o = 0; o < sh.numObjects(); ++o) {
    const Funct& c = s.components[o];
    if (!same_category(c.dom, F.onObjects[o]) || !same_category(c.cod, G.onObjects[o]))
      rep.add("component at " + sh.objectId(o) + " has wrong endpoints");
    ValidationReport fr = validate_funct(c);
    for (auto& p : fr.problems) rep.add("component at " + sh.objectId(o) + ": " + p);
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < sh.numOne(); ++f) {
    const OneCell& fc = sh.one(f);
    const NatT& t = s.structure[f];
    Funct lhs = compose_funct(G.onOne[f], s.components[fc.src]);
    Funct rhs = compose_funct(s.components[fc.dst], F.onOne[f]);
    if (!(t.src == lhs) || !(t.dst == rhs)) {
      rep.add("structure cell at " + fc.id + " has wrong endpoints");
      continue;
    }
    ValidationReport nr = validate_natt(t);
    for (auto& p : nr.problems) rep.add("structure cell at " + fc.id + ": " + p);
  }
  if (!rep.ok()) return rep;

  for (int o = 0; o < sh.numObjects(); ++o) {
    int idc = sh.idOne(o);
    if (!s.structure[idc].isIdentityOn(s.components[o]))
      rep.add("unit law: structure cell at identity of " + sh.objectId(o) + " is not the identity");
  }
  for (int g = 0; g < sh.numOne(); ++g)
    for (int f = 0; f < sh.numOne(); ++f) {
      int gf = sh.composeOne(g, f);
      if (gf < 0) continue;
      if (!(s.structure[gf] == pasted_structure(F, G, s, g, f)))
        rep.add("composition law fails at (" + sh.one(g).id + "," + sh.one(f).id + ")");
    }
  for (int u = 0; u < sh.numTwo(); ++u) {
    const TwoCell& uc = sh.two(u);
    if (sh.isIdentityTwo(u)) continue;
    int a = sh.one(uc.src).src;
    int b = sh.one(uc.src).dst;
    // (sigma_B * F alpha) . sigma_f  ==  sigma_g . (G alpha * sigma_A)
    NatT lhs = vcomp(whisker_left(s.components[b], F.onTwo[u]), s.structure[uc.src]);
    NatT rhs = vcomp(s.structure[uc.dst], whisker_right(G.onTwo[u], s.components[a]));
    if (!(lhs == rhs)) rep.add("2-cell naturality fails at " + uc.id);
  }
  if (!rep.ok()) return rep;

  if (mode != TransMode::Lax) {
    for (int f = 0; f < sh.numOne(); ++f) {
      if (mode == TransMode::Pseudo && !natt_invertible(s.structure[f]))
        rep.add("pseudo mode: structure cell at " + sh.one(f).id + " not invertible");
      if (mode == TransMode::Strict && !s.structure[f].isIdentityOn(s.structure[f].src))
        rep.add("strict mode: structure cell at " + sh.one(f).id + " not the identity");
    }
  }
  return rep;
}

std::vector<LaxTransformation> enumerate_lax_transformations(const DiagPtr& fp, const DiagPtr& gp,
                                                             TransMode mode, Budget& budget) {
  const TwoFunctorToCat& F = *fp;
  const TwoFunctorToCat& G = *gp;
  if (!(*F.shape == *G.shape))
    throw ContractError("enumerate_lax_transformations: shapes differ");
  const Fin2Cat& sh = *F.shape;

  std::vector<LaxTransformation> out;
  std::vector<std::vector<Funct>> componentChoices(sh.numObjects());
  for (int o = 0; o < sh.numObjects(); ++o)
    componentChoices[o] = enumerate_functors(F.onObjects[o], G.onObjects[o], budget);

  std::vector<int32_t> nonIdOne;
  for (int f = 0; f < sh.numOne(); ++f)
    if (!sh.isIdentityOne(f)) nonIdOne.push_back(f);

  LaxTransformation cur;
  cur.source = fp;
  cur.target = gp;
  cur.components.resize(sh.numObjects());
  cur.structure.resize(sh.numOne());
  std::vector<char> haveStruct(sh.numOne(), 0);

  auto compositionOk = [&](int f) {
    for (int g = 0; g < sh.numOne(); ++g) {
      for (int h = 0; h < sh.numOne(); ++h) {
        int gh = sh.composeOne(g, h);
        if (gh < 0) continue;
        if (g != f && h != f && gh != f) continue;
        if (!haveStruct[g] || !haveStruct[h] || !haveStruct[gh]) continue;
        if (!(cur.structure[gh] == pasted_structure(F, G, cur, g, h))) return false;
      }
    }
    return true;
  };

  auto twoCellOk = [&](int f) {
    for (int u = 0; u < sh.numTwo(); ++u) {
      if (sh.isIdentityTwo(u)) continue;
      const TwoCell& uc = sh.two(u);
      if (uc.src != f && uc.dst != f) continue;
      if (!haveStruct[uc.src] || !haveStruct[uc.dst]) continue;
      int a = sh.one(uc.src).src;
      int b = sh.one(uc.src).dst;
      NatT lhs = vcomp(whisker_left(cur.components[b], F.onTwo[u]), cur.structure[uc.src]);
      NatT rhs = vcomp(cur.structure[uc.dst], whisker_right(G.onTwo[u], cur.components[a]));
      if (!(lhs == rhs)) return false;
    }
    return true;
  };

  auto assignStructure = [&](auto&& self, size_t k) -> void {
    if (k == nonIdOne.size()) {
      out.push_back(cur);
      return;
    }
    int f = nonIdOne[k];
    const OneCell& fc = sh.one(f);
    Funct lhs = compose_funct(G.onOne[f], cur.components[fc.src]);
    Funct rhs = compose_funct(cur.components[fc.dst], F.onOne[f]);
    if (mode == TransMode::Strict) {
      if (!(lhs == rhs)) return;
      budget.charge(1, "lax transformation structure");
      cur.structure[f] = identity_natt(lhs);
      haveStruct[f] = 1;
      if (compositionOk(f) && twoCellOk(f)) self(self, k + 1);
      haveStruct[f] = 0;
      return;
    }
    for (NatT& cand : enumerate_natts(lhs, rhs, budget)) {
      budget.charge(1, "lax transformation structure");
      if (mode == TransMode::Pseudo && !natt_invertible(cand)) continue;
      cur.structure[f] = std::move(cand);
      haveStruct[f] = 1;
      if (compositionOk(f) && twoCellOk(f)) self(self, k + 1);
      haveStruct[f] = 0;
    }
  };

  auto assignComponents = [&](auto&& self, int o) -> void {
    if (o == sh.numObjects()) {
      for (int i = 0; i < sh.numObjects(); ++i) {
        int idc = sh.idOne(i);
        cur.structure[idc] = identity_natt(cur.components[i]);
        haveStruct[idc] = 1;
      }
      assignStructure(assignStructure, 0);
      for (int i = 0; i < sh.numObjects(); ++i) haveStruct[sh.idOne(i)] = 0;
      return;
    }
    for (const Funct& cand : componentChoices[o]) {
      budget.charge(1, "lax transformation components");
      cur.components[o] = cand;
      bool feasible = true;
      if (mode == TransMode::Strict) {
        for (int f = 0; f < sh.numOne() && feasible; ++f) {
          const OneCell& fc = sh.one(f);
          if (fc.src > o || fc.dst > o) continue;
          feasible = compose_funct(G.onOne[f], cur.components[fc.src]) ==
                     compose_funct(cur.components[fc.dst], F.onOne[f]);
        }
      }
      if (feasible) self(self, o + 1);
    }
  };
  assignComponents(assignComponents, 0);
  return out;
}

ValidationReport validate_modification(const Modification& m) {
  ValidationReport rep;
  const LaxTransformation& s = m.source;
  const LaxTransformation& t = m.target;
  const TwoFunctorToCat& F = *s.source;
  const TwoFunctorToCat& G = *s.target;
  const Fin2Cat& sh = *F.shape;
  if (static_cast<int>(m.components.size()) != sh.numObjects()) {
    rep.add("modification: component count mismatch");
    return rep;
  }
  for (int o = 0; o < sh.numObjects(); ++o) {
    if (!(m.components[o].src == s.components[o]) || !(m.components[o].dst == t.components[o]))
      rep.add("modification component at " + sh.objectId(o) + " has wrong endpoints");
    ValidationReport nr = validate_natt(m.components[o]);
    for (auto& p : nr.problems) rep.add("modification at " + sh.objectId(o) + ": " + p);
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < sh.numOne(); ++f) {
    const OneCell& fc = sh.one(f);
    // t_f . (Gf * m_A)  ==  (m_B * Ff) . s_f
    NatT lhs = vcomp(t.structure[f], whisker_left(G.onOne[f], m.components[fc.src]));
    NatT rhs = vcomp(whisker_right(m.components[fc.dst], F.onOne[f]), s.structure[f]);
    if (!(lhs == rhs)) rep.add("modification square fails at " + fc.id);
  }
  return rep;
}

std::vector<Modification> enumerate_modifications(const LaxTransformation& s,
                                                  const LaxTransformation& t, Budget& budget) {
  const TwoFunctorToCat& F = *s.source;
  const TwoFunctorToCat& G = *s.target;
  const Fin2Cat& sh = *F.shape;
  std::vector<Modification> out;

  Modification cur;
  cur.source = s;
  cur.target = t;
  cur.components.resize(sh.numObjects());
  std::vector<char> have(sh.numObjects(), 0);

  auto squaresOk = [&](int o) {
    for (int f = 0; f < sh.numOne(); ++f) {
      const OneCell& fc = sh.one(f);
      if (!have[fc.src] || !have[fc.dst]) continue;
      if (fc.src != o && fc.dst != o) continue;
      NatT lhs = vcomp(t.structure[f], whisker_left(G.onOne[f], cur.components[fc.src]));
      NatT rhs = vcomp(whisker_right(cur.components[fc.dst], F.onOne[f]), s.structure[f]);
      if (!(lhs == rhs)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int o) -> void {
    if (o == sh.numObjects()) {
      out.push_back(cur);
      return;
    }
    for (NatT& cand : enumerate_natts(s.components[o], t.components[o], budget)) {
      budget.charge(1, "modification components");
      cur.components[o] = std::move(cand);
      have[o] = 1;
      if (squaresOk(o)) self(self, o + 1);
      have[o] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

LaxHomResult lax_hom_category(const DiagPtr& f, const DiagPtr& g, TransMode mode, Budget& budget) {
  LaxHomResult res;
  std::vector<LaxTransformation> trans = enumerate_lax_transformations(f, g, mode, budget);

  FinCatBuilder bd;
  std::vector<std::string> objIds(trans.size());
  for (size_t i = 0; i < trans.size(); ++i) {
    objIds[i] = trans[i].canonicalId();
    bd.addObject(objIds[i]);
  }
  struct Cell {
    int32_t srcT, dstT;
    Modification m;
    std::string id;
  };
  std::vector<Cell> cells;
  for (size_t i = 0; i < trans.size(); ++i)
    for (size_t j = 0; j < trans.size(); ++j)
      for (Modification& m : enumerate_modifications(trans[i], trans[j], budget)) {
        budget.charge(1, "lax hom morphisms");
        Cell c{static_cast<int32_t>(i), static_cast<int32_t>(j), std::move(m), {}};
        c.id = c.m.canonicalId();
        bd.addMor(c.id, objIds[i], objIds[j]);
        cells.push_back(std::move(c));
      }
  const FinCat& hc = bd.prepare(0);
  std::unordered_map<std::string, int32_t> byId;
  std::vector<int32_t> cellFinal(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) {
    cellFinal[i] = hc.morIndexChecked(cells[i].id);
    byId[cells[i].id] = cellFinal[i];
  }
  for (size_t i = 0; i < trans.size(); ++i) {
    Modification idm;
    idm.source = trans[i];
    idm.target = trans[i];
    for (const Funct& c : trans[i].components) idm.components.push_back(identity_natt(c));
    bd.setIdentityByIndex(hc.objIndexChecked(objIds[i]), byId.at(idm.canonicalId()));
  }
  for (size_t a = 0; a < cells.size(); ++a)
    for (size_t b2 = 0; b2 < cells.size(); ++b2) {
      if (cells[b2].dstT != cells[a].srcT) continue;
      budget.charge(1, "lax hom composition");
      Modification comp;
      comp.source = trans[cells[b2].srcT];
      comp.target = trans[cells[a].dstT];
      comp.components.resize(cells[a].m.components.size());
      for (size_t o = 0; o < comp.components.size(); ++o)
        comp.components[o] = vcomp(cells[a].m.components[o], cells[b2].m.components[o]);
      bd.setComposeByIndex(cellFinal[a], cellFinal[b2], byId.at(comp.canonicalId()));
    }
  res.cat = bd.buildShared();
  res.objTransformations.resize(trans.size());
  res.morModifications.resize(cells.size());
  for (size_t i = 0; i < trans.size(); ++i)
    res.objTransformations[res.cat->objIndexChecked(objIds[i])] = std::move(trans[i]);
  for (size_t i = 0; i < cells.size(); ++i)
    res.morModifications[cellFinal[i]] = std::move(cells[i].m);
  return res;
}

}  // namespace lendkit
