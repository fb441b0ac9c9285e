#include "lendkit/end.hpp"

#include <algorithm>

namespace lendkit {

std::string end_mode_name(EndMode m) {
  switch (m) {
    case EndMode::Strict: return "strict";
    case EndMode::Pseudo: return "pseudo";
    case EndMode::Lax: return "lax";
    case EndMode::Oplax: return "oplax";
  }
  return "lax";
}

EndMode end_mode_from_name(const std::string& s) {
  if (s == "strict") return EndMode::Strict;
  if (s == "pseudo") return EndMode::Pseudo;
  if (s == "lax") return EndMode::Lax;
  if (s == "oplax") return EndMode::Oplax;
  throw InputError("unknown end mode: " + s);
}

namespace {

// Shared machinery for end enumeration over a square diagram.
struct EndContext {
  const TwoFunctorToCat* t;
  const Fin2Cat* base;
  SquareView view;
  EndMode mode;

  explicit EndContext(const TwoFunctorToCat& tt, EndMode m) : t(&tt), view(tt), mode(m) {
    base = tt.base.get();
  }

  CatPtr diag(int a) const { return view.value(a, a); }

  // endpoints of x_f given the object part
  int fSrcObj(int f, const std::vector<int32_t>& perObject) const {
    const OneCell& fc = base->one(f);
    int cov = view.covAct(f).objMap[perObject[fc.src]];
    int con = view.conAct(f).objMap[perObject[fc.dst]];
    return mode == EndMode::Oplax ? con : cov;
  }
  int fDstObj(int f, const std::vector<int32_t>& perObject) const {
    const OneCell& fc = base->one(f);
    int cov = view.covAct(f).objMap[perObject[fc.src]];
    int con = view.conAct(f).objMap[perObject[fc.dst]];
    return mode == EndMode::Oplax ? cov : con;
  }

  // x_{g.h} against the pasting through T; all three structure cells given.
  bool compositionHolds(int g, int h, const WedgeFamily& fam) const {
    int gh = base->composeOne(g, h);
    const FinCat& hostCat = *view.value(base->one(h).src, base->one(g).dst);
    if (mode == EndMode::Oplax) {
      // x_{gh} = T(1,g) x_h . T(h,1) x_g
      int lhs = hostCat.compose(view.act(base->idOne(base->one(h).src), g).morMap[fam.perOne[h]],
                                view.act(h, base->idOne(base->one(g).dst)).morMap[fam.perOne[g]]);
      return lhs == fam.perOne[gh];
    }
    // x_{gh} = T(h,1) x_g . T(1,g) x_h
    int lhs = hostCat.compose(view.act(h, base->idOne(base->one(g).dst)).morMap[fam.perOne[g]],
                              view.act(base->idOne(base->one(h).src), g).morMap[fam.perOne[h]]);
    return lhs == fam.perOne[gh];
  }

  // the square for a 2-cell alpha : f => g
  bool twoCellHolds(int u, const WedgeFamily& fam) const {
    const TwoCell& uc = base->two(u);
    int f = uc.src, g = uc.dst;
    const OneCell& fc = base->one(f);
    const FinCat& hostCat = *view.value(fc.src, fc.dst);
    int a = fc.src, b = fc.dst;
    const NatT& con = view.act2(u, base->idTwo(base->idOne(b)));  // T(alpha,1)
    const NatT& cov = view.act2(base->idTwo(base->idOne(a)), u);  // T(1,alpha)
    if (mode == EndMode::Oplax) {
      // T(1,alpha)_{x_A} . x_f == x_g . T(alpha,1)_{x_B}
      int lhs = hostCat.compose(cov.comp[fam.perObject[a]], fam.perOne[f]);
      int rhs = hostCat.compose(fam.perOne[g], con.comp[fam.perObject[b]]);
      return lhs >= 0 && lhs == rhs;
    }
    // T(alpha,1)_{x_B} . x_f == x_g . T(1,alpha)_{x_A}
    int lhs = hostCat.compose(con.comp[fam.perObject[b]], fam.perOne[f]);
    int rhs = hostCat.compose(fam.perOne[g], cov.comp[fam.perObject[a]]);
    return lhs >= 0 && lhs == rhs;
  }

  // family morphism square at f : A -> B
  bool morphismSquareHolds(int f, const WedgeFamily& x, const WedgeFamily& y,
                           const std::vector<int32_t>& gamma) const {
    const OneCell& fc = base->one(f);
    const FinCat& hostCat = *view.value(fc.src, fc.dst);
    int covG = view.covAct(f).morMap[gamma[fc.src]];  // T(1,f) gamma_A
    int conG = view.conAct(f).morMap[gamma[fc.dst]];  // T(f,1) gamma_B
    if (mode == EndMode::Oplax) {
      // T(1,f) gamma_A . x_f == y_f . T(f,1) gamma_B
      return hostCat.compose(covG, x.perOne[f]) == hostCat.compose(y.perOne[f], conG);
    }
    // T(f,1) gamma_B . x_f == y_f . T(1,f) gamma_A
    return hostCat.compose(conG, x.perOne[f]) == hostCat.compose(y.perOne[f], covG);
  }

  std::string familyId(const WedgeFamily& fam) const {
    std::vector<std::pair<std::string, std::string>> objPart, onePart;
    for (int o = 0; o < base->numObjects(); ++o)
      objPart.emplace_back(base->objectId(o), diag(o)->objectId(fam.perObject[o]));
    for (int f = 0; f < base->numOne(); ++f) {
      if (base->isIdentityOne(f)) continue;
      const OneCell& fc = base->one(f);
      onePart.emplace_back(base->one(f).id, view.value(fc.src, fc.dst)->mor(fam.perOne[f]).id);
    }
    return family_id(objPart, onePart);
  }

  std::string familyMorId(const std::vector<int32_t>& gamma, const std::string& srcId,
                          const std::string& dstId) const {
    std::vector<std::pair<std::string, std::string>> comps;
    for (int o = 0; o < base->numObjects(); ++o)
      comps.emplace_back(base->objectId(o), diag(o)->mor(gamma[o]).id);
    return family_mor_id(comps, srcId, dstId);
  }
};

std::vector<WedgeFamily> enumerate_families(const EndContext& ctx, Budget& budget) {
  const Fin2Cat& base = *ctx.base;
  std::vector<WedgeFamily> out;
  WedgeFamily cur;
  cur.perObject.assign(base.numObjects(), -1);
  cur.perOne.assign(base.numOne(), -1);
  std::vector<char> haveObj(base.numObjects(), 0), haveOne(base.numOne(), 0);

  std::vector<int32_t> nonIdOne;
  for (int f = 0; f < base.numOne(); ++f)
    if (!base.isIdentityOne(f)) nonIdOne.push_back(f);

  auto compositionAround = [&](int f) {
    for (int g = 0; g < base.numOne(); ++g)
      for (int h = 0; h < base.numOne(); ++h) {
        int gh = base.composeOne(g, h);
        if (gh < 0) continue;
        if (g != f && h != f && gh != f) continue;
        if (!haveOne[g] || !haveOne[h] || !haveOne[gh]) continue;
        if (!ctx.compositionHolds(g, h, cur)) return false;
      }
    return true;
  };
  auto twoCellsAround = [&](int f) {
    for (int u = 0; u < base.numTwo(); ++u) {
      if (base.isIdentityTwo(u)) continue;
      const TwoCell& uc = base.two(u);
      if (uc.src != f && uc.dst != f) continue;
      if (!haveOne[uc.src] || !haveOne[uc.dst]) continue;
      if (!ctx.twoCellHolds(u, cur)) return false;
    }
    return true;
  };

  auto assignOne = [&](auto&& self, size_t k) -> void {
    if (k == nonIdOne.size()) {
      out.push_back(cur);
      return;
    }
    int f = nonIdOne[k];
    int srcObj = ctx.fSrcObj(f, cur.perObject);
    int dstObj = ctx.fDstObj(f, cur.perObject);
    const OneCell& fc = base.one(f);
    const FinCat& hostCat = *ctx.view.value(fc.src, fc.dst);
    for (int32_t cand : hostCat.hom(srcObj, dstObj)) {
      budget.charge(1, "end families: structure cells");
      if (ctx.mode == EndMode::Pseudo && !hostCat.isInvertible(cand)) continue;
      if (ctx.mode == EndMode::Strict && !hostCat.isIdentity(cand)) continue;
      cur.perOne[f] = cand;
      haveOne[f] = 1;
      if (compositionAround(f) && twoCellsAround(f)) self(self, k + 1);
      haveOne[f] = 0;
      cur.perOne[f] = -1;
    }
  };

  auto assignObj = [&](auto&& self, int o) -> void {
    if (o == base.numObjects()) {
      for (int i = 0; i < base.numObjects(); ++i) {
        int idc = base.idOne(i);
        cur.perOne[idc] = ctx.diag(i)->identity(cur.perObject[i]);
        haveOne[idc] = 1;
      }
      assignOne(assignOne, 0);
      for (int i = 0; i < base.numObjects(); ++i) {
        haveOne[base.idOne(i)] = 0;
        cur.perOne[base.idOne(i)] = -1;
      }
      return;
    }
    for (int cand = 0; cand < ctx.diag(o)->numObjects(); ++cand) {
      budget.charge(1, "end families: objects");
      cur.perObject[o] = cand;
      haveObj[o] = 1;
      bool feasible = true;
      for (int f = 0; f < base.numOne() && feasible; ++f) {
        if (base.isIdentityOne(f)) continue;
        const OneCell& fc = base.one(f);
        if (!haveObj[fc.src] || !haveObj[fc.dst]) continue;
        int s = ctx.fSrcObj(f, cur.perObject);
        int d = ctx.fDstObj(f, cur.perObject);
        if (ctx.mode == EndMode::Strict)
          feasible = (s == d);
        else
          feasible = !ctx.view.value(fc.src, fc.dst)->hom(s, d).empty();
      }
      if (feasible) self(self, o + 1);
      haveObj[o] = 0;
      cur.perObject[o] = -1;
    }
  };
  assignObj(assignObj, 0);
  return out;
}

}  // namespace

std::string EndResult::familyObjectId(const WedgeFamily& fam) const {
  EndContext ctx(*diagram, mode);
  return ctx.familyId(fam);
}

EndResult end_of(const DiagPtr& t, EndMode mode, Budget& budget) {
  if (t->variance != Variance::OpFirst)
    throw ContractError("end_of: diagram must be over A^op x A");
  EndContext ctx(*t, mode);
  const Fin2Cat& base = *ctx.base;

  EndResult res;
  res.mode = mode;
  res.diagram = t;
  res.families = enumerate_families(ctx, budget);

  FinCatBuilder bd;
  std::vector<std::string> objIds(res.families.size());
  for (size_t i = 0; i < res.families.size(); ++i) {
    objIds[i] = ctx.familyId(res.families[i]);
    bd.addObject(objIds[i]);
  }

  // family morphisms: componentwise with the square at every 1-cell
  struct Cell {
    int32_t srcF, dstF;
    std::vector<int32_t> gamma;
    std::string id;
  };
  std::vector<Cell> cells;
  std::vector<int32_t> gamma(base.numObjects(), -1);
  for (size_t i = 0; i < res.families.size(); ++i) {
    for (size_t j = 0; j < res.families.size(); ++j) {
      const WedgeFamily& x = res.families[i];
      const WedgeFamily& y = res.families[j];
      std::vector<char> have(base.numObjects(), 0);
      auto squares = [&](int o) {
        for (int f = 0; f < base.numOne(); ++f) {
          const OneCell& fc = base.one(f);
          if (!have[fc.src] || !have[fc.dst]) continue;
          if (fc.src != o && fc.dst != o) continue;
          if (!ctx.morphismSquareHolds(f, x, y, gamma)) return false;
        }
        return true;
      };
      auto rec = [&](auto&& self, int o) -> void {
        if (o == base.numObjects()) {
          Cell c{static_cast<int32_t>(i), static_cast<int32_t>(j), gamma,
                 ctx.familyMorId(gamma, objIds[i], objIds[j])};
          bd.addMor(c.id, objIds[i], objIds[j]);
          cells.push_back(std::move(c));
          return;
        }
        for (int32_t cand : ctx.diag(o)->hom(x.perObject[o], y.perObject[o])) {
          budget.charge(1, "end family morphisms");
          gamma[o] = cand;
          have[o] = 1;
          if (squares(o)) self(self, o + 1);
          have[o] = 0;
          gamma[o] = -1;
        }
      };
      rec(rec, 0);
    }
  }

  const FinCat& ec = bd.prepare(0);
  std::unordered_map<std::string, int32_t> byId;
  std::vector<int32_t> cellFinal(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) {
    cellFinal[i] = ec.morIndexChecked(cells[i].id);
    byId[cells[i].id] = cellFinal[i];
  }
  for (size_t i = 0; i < res.families.size(); ++i) {
    std::vector<int32_t> idGamma(base.numObjects());
    for (int o = 0; o < base.numObjects(); ++o)
      idGamma[o] = ctx.diag(o)->identity(res.families[i].perObject[o]);
    bd.setIdentityByIndex(ec.objIndexChecked(objIds[i]),
                          byId.at(ctx.familyMorId(idGamma, objIds[i], objIds[i])));
  }
  for (size_t s = 0; s < cells.size(); ++s)
    for (size_t u = 0; u < cells.size(); ++u) {
      if (cells[u].dstF != cells[s].srcF) continue;
      budget.charge(1, "end composition");
      std::vector<int32_t> comp(base.numObjects());
      for (int o = 0; o < base.numObjects(); ++o)
        comp[o] = ctx.diag(o)->compose(cells[s].gamma[o], cells[u].gamma[o]);
      bd.setComposeByIndex(
          cellFinal[s], cellFinal[u],
          byId.at(ctx.familyMorId(comp, objIds[cells[u].srcF], objIds[cells[s].dstF])));
    }
  res.category = bd.buildShared();

  // reorder families/cells to final indices
  {
    std::vector<WedgeFamily> fams(res.families.size());
    for (size_t i = 0; i < res.families.size(); ++i)
      fams[res.category->objIndexChecked(objIds[i])] = std::move(res.families[i]);
    res.families = std::move(fams);
    res.morComponents.resize(cells.size());
    for (size_t i = 0; i < cells.size(); ++i)
      res.morComponents[cellFinal[i]] = std::move(cells[i].gamma);
  }

  // the universal wedge: evaluation projections
  res.wedge.apex = res.category;
  res.wedge.components.resize(base.numObjects());
  for (int o = 0; o < base.numObjects(); ++o) {
    Funct& proj = res.wedge.components[o];
    proj.dom = res.category;
    proj.cod = ctx.diag(o);
    proj.objMap.resize(res.category->numObjects());
    proj.morMap.resize(res.category->numMors());
    for (int i = 0; i < res.category->numObjects(); ++i)
      proj.objMap[i] = res.families[i].perObject[o];
    for (int m = 0; m < res.category->numMors(); ++m) proj.morMap[m] = res.morComponents[m][o];
  }
  res.wedge.structure.resize(base.numOne());
  for (int f = 0; f < base.numOne(); ++f) {
    const OneCell& fc = base.one(f);
    NatT& st = res.wedge.structure[f];
    Funct cov = compose_funct(ctx.view.covAct(f), res.wedge.components[fc.src]);
    Funct con = compose_funct(ctx.view.conAct(f), res.wedge.components[fc.dst]);
    st.src = mode == EndMode::Oplax ? con : cov;
    st.dst = mode == EndMode::Oplax ? cov : con;
    st.comp.resize(res.category->numObjects());
    for (int i = 0; i < res.category->numObjects(); ++i) st.comp[i] = res.families[i].perOne[f];
  }
  return res;
}

ValidationReport validate_wedge(const DiagPtr& t, EndMode mode, const LaxWedge& w) {
  ValidationReport rep;
  EndContext ctx(*t, mode);
  const Fin2Cat& base = *ctx.base;
  if (static_cast<int>(w.components.size()) != base.numObjects() ||
      static_cast<int>(w.structure.size()) != base.numOne()) {
    rep.add("wedge: table sizes do not match the base");
    return rep;
  }
  for (int o = 0; o < base.numObjects(); ++o) {
    if (!same_category(w.components[o].dom, w.apex) ||
        !same_category(w.components[o].cod, ctx.diag(o)))
      rep.add("wedge component at " + base.objectId(o) + " has wrong endpoints");
    ValidationReport fr = validate_funct(w.components[o]);
    for (auto& p : fr.problems) rep.add("wedge component at " + base.objectId(o) + ": " + p);
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < base.numOne(); ++f) {
    const OneCell& fc = base.one(f);
    Funct cov = compose_funct(ctx.view.covAct(f), w.components[fc.src]);
    Funct con = compose_funct(ctx.view.conAct(f), w.components[fc.dst]);
    const NatT& st = w.structure[f];
    bool okEnds = mode == EndMode::Oplax ? (st.src == con && st.dst == cov)
                                         : (st.src == cov && st.dst == con);
    if (!okEnds) {
      rep.add("wedge structure cell at " + fc.id + " has wrong endpoints");
      continue;
    }
    ValidationReport nr = validate_natt(st);
    for (auto& p : nr.problems) rep.add("wedge structure at " + fc.id + ": " + p);
  }
  if (!rep.ok()) return rep;

  // pointwise: every apex object is a family, every apex morphism a family morphism
  const FinCat& apex = *w.apex;
  for (int z = 0; z < apex.numObjects(); ++z) {
    WedgeFamily fam;
    fam.perObject.resize(base.numObjects());
    fam.perOne.resize(base.numOne());
    for (int o = 0; o < base.numObjects(); ++o) fam.perObject[o] = w.components[o].objMap[z];
    for (int f = 0; f < base.numOne(); ++f) fam.perOne[f] = w.structure[f].comp[z];
    for (int o = 0; o < base.numObjects(); ++o) {
      int idc = base.idOne(o);
      if (fam.perOne[idc] != ctx.diag(o)->identity(fam.perObject[o]))
        rep.add("unit axiom fails at apex object " + apex.objectId(z) + ", object " +
                base.objectId(o));
    }
    for (int g = 0; g < base.numOne(); ++g)
      for (int h = 0; h < base.numOne(); ++h) {
        if (base.composeOne(g, h) < 0) continue;
        if (!ctx.compositionHolds(g, h, fam))
          rep.add("composition axiom fails at apex object " + apex.objectId(z) + ", pair (" +
                  base.one(g).id + "," + base.one(h).id + ")");
      }
    for (int u = 0; u < base.numTwo(); ++u) {
      if (base.isIdentityTwo(u)) continue;
      if (!ctx.twoCellHolds(u, fam))
        rep.add("2-cell axiom fails at apex object " + apex.objectId(z) + ", 2-cell " +
                base.two(u).id);
    }
    if (mode == EndMode::Pseudo || mode == EndMode::Strict) {
      for (int f = 0; f < base.numOne(); ++f) {
        const OneCell& fc = base.one(f);
        const FinCat& hostCat = *ctx.view.value(fc.src, fc.dst);
        if (mode == EndMode::Pseudo && !hostCat.isInvertible(fam.perOne[f]))
          rep.add("pseudo wedge: structure component not invertible at apex object " +
                  apex.objectId(z));
        if (mode == EndMode::Strict && !hostCat.isIdentity(fam.perOne[f]))
          rep.add("strict wedge: structure component not the identity at apex object " +
                  apex.objectId(z));
      }
    }
  }
  return rep;
}

Funct factorize_wedge(const EndResult& e, const LaxWedge& sigma) {
  ValidationReport rep = validate_wedge(e.diagram, e.mode, sigma);
  if (!rep.ok()) throw ContractError("factorize_wedge: not a wedge:\n" + rep.joined());
  EndContext ctx(*e.diagram, e.mode);
  const Fin2Cat& base = *ctx.base;
  const FinCat& apex = *sigma.apex;

  Funct u;
  u.dom = sigma.apex;
  u.cod = e.category;
  u.objMap.resize(apex.numObjects());
  u.morMap.resize(apex.numMors());
  for (int z = 0; z < apex.numObjects(); ++z) {
    WedgeFamily fam;
    fam.perObject.resize(base.numObjects());
    fam.perOne.resize(base.numOne());
    for (int o = 0; o < base.numObjects(); ++o) fam.perObject[o] = sigma.components[o].objMap[z];
    for (int f = 0; f < base.numOne(); ++f) fam.perOne[f] = sigma.structure[f].comp[z];
    u.objMap[z] = e.category->objIndexChecked(ctx.familyId(fam));
  }
  for (int m = 0; m < apex.numMors(); ++m) {
    std::vector<int32_t> gamma(base.numObjects());
    for (int o = 0; o < base.numObjects(); ++o) gamma[o] = sigma.components[o].morMap[m];
    const std::string srcId = e.category->objectId(u.objMap[apex.mor(m).src]);
    const std::string dstId = e.category->objectId(u.objMap[apex.mor(m).dst]);
    u.morMap[m] = e.category->morIndexChecked(ctx.familyMorId(gamma, srcId, dstId));
  }
  return u;
}

NatT factorize_modification(const EndResult& e, const Funct& u, const Funct& v,
                            const std::vector<NatT>& gamma) {
  EndContext ctx(*e.diagram, e.mode);
  const Fin2Cat& base = *ctx.base;
  if (!same_category(u.cod, e.category) || !same_category(v.cod, e.category) ||
      !same_category(u.dom, v.dom))
    throw ContractError("factorize_modification: functors not parallel into the end");
  if (static_cast<int>(gamma.size()) != base.numObjects())
    throw ContractError("factorize_modification: component count mismatch");
  const FinCat& apex = *u.dom;

  for (int o = 0; o < base.numObjects(); ++o) {
    const NatT& g = gamma[o];
    if (!(g.src == compose_funct(e.wedge.components[o], u)) ||
        !(g.dst == compose_funct(e.wedge.components[o], v)))
      throw ContractError("factorize_modification: component endpoints wrong at " +
                          base.objectId(o));
    ValidationReport nr = validate_natt(g);
    if (!nr.ok())
      throw ContractError("factorize_modification: component at " + base.objectId(o) +
                          " is not natural:\n" + nr.joined());
  }

  NatT beta;
  beta.src = u;
  beta.dst = v;
  beta.comp.resize(apex.numObjects());
  for (int z = 0; z < apex.numObjects(); ++z) {
    std::vector<int32_t> comps(base.numObjects());
    for (int o = 0; o < base.numObjects(); ++o) comps[o] = gamma[o].comp[z];
    const std::string srcId = e.category->objectId(u.objMap[z]);
    const std::string dstId = e.category->objectId(v.objMap[z]);
    int m = e.category->morIndex(ctx.familyMorId(comps, srcId, dstId));
    if (m < 0)
      throw ContractError(
          "factorize_modification: components at an apex object do not form a family morphism (the "
          "modification squares fail)");
    beta.comp[z] = m;
  }
  ValidationReport nr = validate_natt(beta);
  if (!nr.ok())
    throw ContractError("factorize_modification: induced 2-cell not natural:\n" + nr.joined());
  return beta;
}

PartialEndResult partial_end(const DiagPtr& t, EndMode mode, Budget& budget) {
  if (t->variance != Variance::OpFirstExtra)
    throw ContractError("partial_end: diagram must be over A^op x A x B");
  TripleView view(*t);
  const Fin2Cat& extra = view.extra();
  const Fin2Cat& base = view.base();

  PartialEndResult out;
  std::vector<EndResult>& ends = out.ends;
  std::vector<DiagPtr>& restricted = out.restricted;
  ends.reserve(extra.numObjects());
  for (int e = 0; e < extra.numObjects(); ++e) {
    restricted.push_back(share(view.restrict(e, budget)));
    ends.push_back(end_of(restricted.back(), mode, budget));
  }

  TwoFunctorToCat& r = out.diagram;
  r.base = t->extra;
  r.variance = Variance::Covariant;
  r.shape = t->extra;
  r.onObjects.resize(extra.numObjects());
  for (int e = 0; e < extra.numObjects(); ++e) r.onObjects[e] = ends[e].category;

  r.onOne.resize(extra.numOne());
  for (int h = 0; h < extra.numOne(); ++h) {
    const OneCell& hc = extra.one(h);
    const EndResult& src = ends[hc.src];
    const EndResult& dst = ends[hc.dst];
    EndContext dctx(*restricted[hc.dst], mode);
    Funct& ff = r.onOne[h];
    ff.dom = src.category;
    ff.cod = dst.category;
    ff.objMap.resize(src.category->numObjects());
    ff.morMap.resize(src.category->numMors());
    for (int i = 0; i < src.category->numObjects(); ++i) {
      const WedgeFamily& fam = src.families[i];
      WedgeFamily img;
      img.perObject.resize(base.numObjects());
      img.perOne.resize(base.numOne());
      for (int o = 0; o < base.numObjects(); ++o)
        img.perObject[o] =
            view.act(base.idOne(o), base.idOne(o), h).objMap[fam.perObject[o]];
      for (int f = 0; f < base.numOne(); ++f) {
        const OneCell& fc = base.one(f);
        img.perOne[f] =
            view.act(base.idOne(fc.src), base.idOne(fc.dst), h).morMap[fam.perOne[f]];
      }
      ff.objMap[i] = dst.category->objIndexChecked(dctx.familyId(img));
    }
    for (int m = 0; m < src.category->numMors(); ++m) {
      std::vector<int32_t> gamma(base.numObjects());
      for (int o = 0; o < base.numObjects(); ++o)
        gamma[o] = view.act(base.idOne(o), base.idOne(o), h).morMap[src.morComponents[m][o]];
      const std::string srcId = dst.category->objectId(ff.objMap[src.category->mor(m).src]);
      const std::string dstId = dst.category->objectId(ff.objMap[src.category->mor(m).dst]);
      ff.morMap[m] = dst.category->morIndexChecked(dctx.familyMorId(gamma, srcId, dstId));
    }
  }

  r.onTwo.resize(extra.numTwo());
  for (int w = 0; w < extra.numTwo(); ++w) {
    const TwoCell& wc = extra.two(w);
    int e0 = extra.one(wc.src).src;
    int e1 = extra.one(wc.src).dst;
    const EndResult& src = ends[e0];
    const EndResult& dst = ends[e1];
    EndContext dctx(*restricted[e1], mode);
    NatT& nt = r.onTwo[w];
    nt.src = r.onOne[wc.src];
    nt.dst = r.onOne[wc.dst];
    nt.comp.resize(src.category->numObjects());
    for (int i = 0; i < src.category->numObjects(); ++i) {
      const WedgeFamily& fam = src.families[i];
      std::vector<int32_t> gamma(base.numObjects());
      for (int o = 0; o < base.numObjects(); ++o) {
        const NatT& cellAct = view.act2(base.idTwo(base.idOne(o)), base.idTwo(base.idOne(o)), w);
        gamma[o] = cellAct.comp[fam.perObject[o]];
      }
      const std::string srcId = dst.category->objectId(nt.src.objMap[i]);
      const std::string dstId = dst.category->objectId(nt.dst.objMap[i]);
      nt.comp[i] = dst.category->morIndexChecked(dctx.familyMorId(gamma, srcId, dstId));
    }
  }
  return out;
}

}  // namespace lendkit
