#include "lendkit/limits.hpp"

namespace lendkit {

WeightedLimitResult lax_limit(const DiagPtr& f, const DiagPtr& g, EndMode mode, Budget& budget) {
  if (mode == EndMode::Strict) return weighted_limit_strict(f, g, budget);
  DiagPtr power = share(power_diagram(*f, *g, budget));
  EndResult e = end_of(power, mode, budget);
  return {e.category, std::string(end_mode_name(mode)) + "-end-of-powers"};
}

WeightedLimitResult weighted_limit_strict(const DiagPtr& w, const DiagPtr& t, Budget& budget) {
  DiagPtr power = share(power_diagram(*w, *t, budget));
  EndResult e = end_of(power, EndMode::Strict, budget);
  return {e.category, "strict-end-of-powers"};
}

GrothendieckResult grothendieck(const DiagPtr& g, Budget& budget) {
  if (!g->base->locallyDiscrete())
    throw ContractError("grothendieck: shape must be locally discrete");
  DiagPtr t = share(second_slot_diagram(*g, budget));
  GrothendieckResult res{nullptr, lax_coend(t, budget)};
  res.category = res.cowedge.category;
  return res;
}

LaxSliceResult lax_slice(const TwoCatPtr& a, const std::string& objId, Budget& budget) {
  int c = a->objIndexChecked(objId);
  FinCatBuilder bd;
  std::vector<int32_t> objs;
  for (int p = 0; p < a->numOne(); ++p) {
    if (a->one(p).dst != c) continue;
    budget.charge(1, "lax slice objects");
    bd.addObject(a->one(p).id);
    objs.push_back(p);
  }
  struct Tri {
    int32_t p, q;  // 1-cells into c
    int32_t f;     // src p -> src q
    int32_t bar;   // 2-cell p => q . f
  };
  std::vector<Tri> tris;
  auto triId = [&](const Tri& t) {
    return arrow_id(a->one(t.p).id, a->one(t.q).id, pair_id(a->one(t.f).id, a->two(t.bar).id));
  };
  for (int32_t p : objs)
    for (int32_t q : objs)
      for (int32_t f : a->oneHom(a->one(p).src, a->one(q).src)) {
        int qf = a->composeOne(q, f);
        for (int32_t bar : a->twoHom(p, qf)) {
          budget.charge(1, "lax slice morphisms");
          Tri t{p, q, f, bar};
          bd.addMor(triId(t), a->one(p).id, a->one(q).id);
          tris.push_back(t);
        }
      }
  const FinCat& sc = bd.prepare(0);
  for (int32_t p : objs) {
    Tri idT{p, p, a->idOne(a->one(p).src), a->idTwo(p)};
    bd.setIdentityByIndex(sc.objIndexChecked(a->one(p).id), sc.morIndexChecked(triId(idT)));
  }
  for (const Tri& s : tris)
    for (const Tri& t : tris) {
      if (t.q != s.p) continue;
      // s after t : composite 1-cell s.f . t.f, 2-cell (s.bar * t.f) . t.bar
      Tri comp{t.p, s.q, a->composeOne(s.f, t.f), a->vcomp(a->whiskerR(s.bar, t.f), t.bar)};
      bd.setComposeByIndex(sc.morIndexChecked(triId(s)), sc.morIndexChecked(triId(t)),
                           sc.morIndexChecked(triId(comp)));
    }
  LaxSliceResult res;
  res.category = bd.buildShared();
  res.objOneCell.resize(res.category->numObjects());
  res.morData.resize(res.category->numMors());
  for (int32_t p : objs) res.objOneCell[res.category->objIndexChecked(a->one(p).id)] = p;
  for (const Tri& t : tris) res.morData[res.category->morIndexChecked(triId(t))] = {t.f, t.bar};
  return res;
}

namespace {

void force_identity_two_cells(TwoFunctorToCat& t) {
  const Fin2Cat& shape = *t.shape;
  for (int u = 0; u < shape.numTwo(); ++u) t.onTwo[u] = identity_natt(t.onOne[shape.two(u).src]);
}

}  // namespace

TwoFunctorToCat yoneda_sharp_weight(const TwoCatPtr& a, Budget& budget) {
  if (!a->locallyDiscrete())
    throw ContractError("yoneda_sharp_weight: shape must be locally discrete");
  const Fin2Cat& base = *a;
  const int n = base.numObjects();

  // S_{xy}(c,d) = hom(x,d) x hom(c,y); everything downstream decomposes
  // objects through these stored products.
  auto idx4 = [n](int x, int y, int c, int d) { return ((x * n + y) * n + c) * n + d; };
  std::vector<ProductResult> prods(static_cast<size_t>(n) * n * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          prods[idx4(x, y, c, d)] =
              product_cat_indexed({base.localHom(x, d), base.localHom(c, y)}, budget);

  auto oneOf = [&](const ProductResult& pr, int leg, int comp) {
    return base.oneIndexChecked(pr.projections[leg].cod->objectId(comp));
  };

  // W(x,y) = coend over C of S_{xy}(C,C)
  std::vector<CowedgeResult> weights(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      TwoFunctorToCat integrand = make_square_diagram(
          a, budget, [&](int c, int d) { return prods[idx4(x, y, c, d)].cat; },
          [&](int f, int g) {
            // (p, q) |-> (g.p, q.f)
            const OneCell& fc = base.one(f);
            const OneCell& gc = base.one(g);
            const ProductResult& dom = prods[idx4(x, y, fc.dst, gc.src)];
            const ProductResult& cod = prods[idx4(x, y, fc.src, gc.dst)];
            Funct r;
            r.dom = dom.cat;
            r.cod = cod.cat;
            r.objMap.resize(dom.cat->numObjects());
            r.morMap.resize(dom.cat->numMors());
            for (int o = 0; o < dom.cat->numObjects(); ++o) {
              int p = oneOf(dom, 0, dom.objComponents[o][0]);
              int q = oneOf(dom, 1, dom.objComponents[o][1]);
              r.objMap[o] = cod.cat->objIndexChecked(pair_id(
                  base.one(base.composeOne(g, p)).id, base.one(base.composeOne(q, f)).id));
            }
            for (int m = 0; m < dom.cat->numMors(); ++m)
              r.morMap[m] = cod.cat->identity(r.objMap[dom.cat->mor(m).src]);
            return r;
          },
          [&](int, int) { return NatT{}; });
      force_identity_two_cells(integrand);
      weights[x * n + y] = lax_coend(share(std::move(integrand)), budget);
    }

  TwoFunctorToCat w = make_square_diagram(
      a, budget, [&](int x, int y) { return weights[x * n + y].category; },
      [&](int u, int v) {
        // W(dst u, src v) -> W(src u, dst v): (C,(p,q)) |-> (C,(p.u, v.q))
        const OneCell& uc = base.one(u);
        const OneCell& vc = base.one(v);
        const CowedgeResult& dom = weights[uc.dst * n + vc.src];
        const CowedgeResult& cod = weights[uc.src * n + vc.dst];
        Funct r;
        r.dom = dom.category;
        r.cod = cod.category;
        r.objMap.resize(dom.category->numObjects());
        r.morMap.resize(dom.category->numMors());
        auto imagePair = [&](int c, int valObj) {
          const ProductResult& pr = prods[idx4(uc.dst, vc.src, c, c)];
          int p = oneOf(pr, 0, pr.objComponents[valObj][0]);
          int q = oneOf(pr, 1, pr.objComponents[valObj][1]);
          return std::pair<int, int>{base.composeOne(p, u), base.composeOne(v, q)};
        };
        for (int o = 0; o < dom.category->numObjects(); ++o) {
          auto [c, valObj] = dom.objData[o];
          auto [pu, vq] = imagePair(c, valObj);
          r.objMap[o] =
              cod.category->objIndexChecked(pair_id(
                  base.objectId(c), pair_id(base.one(pu).id, base.one(vq).id)));
        }
        for (int m = 0; m < dom.category->numMors(); ++m) {
          const Mor& mm = dom.category->mor(m);
          auto [f, phi] = dom.morData[m];
          (void)phi;
          auto [srcC, srcVal] = dom.objData[mm.src];
          auto [pu, vq] = imagePair(srcC, srcVal);
          auto [dstC, dstVal] = dom.objData[mm.dst];
          (void)dstVal;
          // payload: identity on (f . p . u, v . q) in S'(srcC, dstC)
          const ProductResult& mid = prods[idx4(uc.src, vc.dst, srcC, dstC)];
          int payloadObj = mid.cat->objIndexChecked(
              pair_id(base.one(base.composeOne(f, pu)).id, base.one(vq).id));
          int payload = mid.cat->identity(payloadObj);
          r.morMap[m] = cod.category->morIndexChecked(
              arrow_id(cod.category->objectId(r.objMap[mm.src]),
                       cod.category->objectId(r.objMap[mm.dst]),
                       pair_id(base.one(f).id, mid.cat->mor(payload).id)));
        }
        return r;
      },
      [&](int, int) { return NatT{}; });
  force_identity_two_cells(w);
  return w;
}

}  // namespace lendkit
