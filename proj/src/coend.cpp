#include "lendkit/coend.hpp"

namespace lendkit {

std::string CowedgeResult::pairObjectId(int baseObj, int valueObj) const {
  const Fin2Cat& base = *diagram->base;
  SquareView v(*diagram);
  return pair_id(base.objectId(baseObj), v.value(baseObj, baseObj)->objectId(valueObj));
}

CowedgeResult lax_coend(const DiagPtr& t, Budget& budget) {
  if (t->variance != Variance::OpFirst)
    throw ContractError("lax_coend: diagram must be over A^op x A");
  if (!t->base->locallyDiscrete())
    throw ContractError(
        "lax_coend: base has nontrivial 2-cells; the tabulated construction only supports locally "
        "discrete shapes");
  SquareView view(*t);
  const Fin2Cat& base = *t->base;

  CowedgeResult res;
  res.diagram = t;

  FinCatBuilder bd;
  std::vector<std::pair<int32_t, int32_t>> objs;
  auto objId = [&](int a, int x) {
    return pair_id(base.objectId(a), view.value(a, a)->objectId(x));
  };
  for (int a = 0; a < base.numObjects(); ++a) {
    for (int x = 0; x < view.value(a, a)->numObjects(); ++x) {
      budget.charge(1, "coend objects");
      bd.addObject(objId(a, x));
      objs.emplace_back(a, x);
    }
  }

  struct Edge {
    int32_t srcA, srcX, dstA, dstX;
    int32_t f, phi;
  };
  std::vector<Edge> edges;
  auto edgeId = [&](const Edge& e) {
    const OneCell& fc = base.one(e.f);
    return arrow_id(objId(e.srcA, e.srcX), objId(e.dstA, e.dstX),
                    pair_id(fc.id, view.value(e.srcA, e.dstA)->mor(e.phi).id));
  };
  for (auto [a, x] : objs) {
    for (auto [b, y] : objs) {
      for (int32_t f : base.oneHom(a, b)) {
        const FinCat& host = *view.value(a, b);
        int sx = view.covAct(f).objMap[x];
        int dy = view.conAct(f).objMap[y];
        for (int32_t phi : host.hom(sx, dy)) {
          budget.charge(1, "coend morphisms");
          Edge e{static_cast<int32_t>(a), static_cast<int32_t>(x), static_cast<int32_t>(b),
                 static_cast<int32_t>(y), f, phi};
          bd.addMor(edgeId(e), objId(a, x), objId(b, y));
          edges.push_back(e);
        }
      }
    }
  }

  const FinCat& cc = bd.prepare(0);
  for (auto [a, x] : objs) {
    Edge idE{static_cast<int32_t>(a), static_cast<int32_t>(x), static_cast<int32_t>(a),
             static_cast<int32_t>(x), base.idOne(a), view.value(a, a)->identity(x)};
    bd.setIdentityByIndex(cc.objIndexChecked(objId(a, x)), cc.morIndexChecked(edgeId(idE)));
  }
  for (const Edge& s : edges) {
    for (const Edge& e : edges) {
      if (e.dstA != s.srcA || e.dstX != s.srcX) continue;
      budget.charge(1, "coend composition");
      // s : (B,y) -> (C,z) after e : (A,x) -> (B,y)
      int gf = base.composeOne(s.f, e.f);
      const FinCat& host = *view.value(e.srcA, s.dstA);
      int lhs = view.act(e.f, base.idOne(base.one(s.f).dst)).morMap[s.phi];  // T(f,1) psi
      int rhs = view.act(base.idOne(e.srcA), s.f).morMap[e.phi];             // T(1,g) phi
      Edge comp{e.srcA, e.srcX, s.dstA, s.dstX, gf, host.compose(lhs, rhs)};
      bd.setComposeByIndex(cc.morIndexChecked(edgeId(s)), cc.morIndexChecked(edgeId(e)),
                           cc.morIndexChecked(edgeId(comp)));
    }
  }
  res.category = bd.buildShared();
  res.objData.resize(objs.size());
  res.morData.resize(res.category->numMors());
  for (auto [a, x] : objs) {
    res.objData[res.category->objIndexChecked(objId(a, x))] = {a, x};
  }
  for (const Edge& e : edges)
    res.morData[res.category->morIndexChecked(edgeId(e))] = {e.f, e.phi};

  res.injections.resize(base.numObjects());
  for (int a = 0; a < base.numObjects(); ++a) {
    Funct& inj = res.injections[a];
    CatPtr val = view.value(a, a);
    inj.dom = val;
    inj.cod = res.category;
    inj.objMap.resize(val->numObjects());
    inj.morMap.resize(val->numMors());
    for (int x = 0; x < val->numObjects(); ++x)
      inj.objMap[x] = res.category->objIndexChecked(objId(a, x));
    for (int m = 0; m < val->numMors(); ++m) {
      Edge e{static_cast<int32_t>(a), val->mor(m).src, static_cast<int32_t>(a), val->mor(m).dst,
             base.idOne(a), static_cast<int32_t>(m)};
      inj.morMap[m] = res.category->morIndexChecked(edgeId(e));
    }
  }
  return res;
}

}  // namespace lendkit
