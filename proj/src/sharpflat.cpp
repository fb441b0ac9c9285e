#include "lendkit/sharpflat.hpp"

namespace lendkit {

SharpResult sharp_of(const DiagPtr& fp, Budget& budget) {
  const TwoFunctorToCat& F = *fp;
  if (F.variance != Variance::Covariant)
    throw ContractError("sharp_of: diagram must be covariant");
  if (!F.base->locallyDiscrete())
    throw ContractError("sharp_of: shape must be locally discrete");
  const Fin2Cat& base = *F.base;
  const TwoCatPtr& baseP = F.base;
  const int n = base.numObjects();

  // integrand at C: S_C(A,B) = hom(A,C) x F(B)
  auto idx3 = [n](int c, int a, int b) { return (c * n + a) * n + b; };
  std::vector<ProductResult> prods(static_cast<size_t>(n) * n * n);
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        prods[idx3(c, a, b)] = product_cat_indexed({base.localHom(a, c), F.onObjects[b]}, budget);

  auto oneOf = [&](const ProductResult& pr, int comp) {
    return base.oneIndexChecked(pr.projections[0].cod->objectId(comp));
  };

  SharpResult res;
  res.coends.resize(n);
  for (int c = 0; c < n; ++c) {
    TwoFunctorToCat integrand = make_square_diagram(
        baseP, budget, [&](int a, int b) { return prods[idx3(c, a, b)].cat; },
        [&](int f, int g) {
          // (p, x) |-> (p.f, F g (x))
          const OneCell& fc = base.one(f);
          const OneCell& gc = base.one(g);
          const ProductResult& dom = prods[idx3(c, fc.dst, gc.src)];
          const ProductResult& cod = prods[idx3(c, fc.src, gc.dst)];
          Funct r;
          r.dom = dom.cat;
          r.cod = cod.cat;
          r.objMap.resize(dom.cat->numObjects());
          r.morMap.resize(dom.cat->numMors());
          for (int o = 0; o < dom.cat->numObjects(); ++o) {
            int p = oneOf(dom, dom.objComponents[o][0]);
            int x = dom.objComponents[o][1];
            r.objMap[o] = cod.objOf(
                {cod.projections[0].cod->objIndexChecked(base.one(base.composeOne(p, f)).id),
                 F.onOne[g].objMap[x]});
          }
          for (int m = 0; m < dom.cat->numMors(); ++m) {
            int p = oneOf(dom, dom.objComponents[dom.cat->mor(m).src][0]);
            int xm = dom.morComponents[m][1];
            int homIdObj =
                cod.projections[0].cod->objIndexChecked(base.one(base.composeOne(p, f)).id);
            r.morMap[m] = cod.morOf(
                {cod.projections[0].cod->identity(homIdObj), F.onOne[g].morMap[xm]});
          }
          return r;
        },
        [&](int, int) { return NatT{}; });
    const Fin2Cat& shape = *integrand.shape;
    for (int u = 0; u < shape.numTwo(); ++u)
      integrand.onTwo[u] = identity_natt(integrand.onOne[shape.two(u).src]);
    res.coends[c] = lax_coend(share(std::move(integrand)), budget);
  }

  res.diagram.base = baseP;
  res.diagram.variance = Variance::Covariant;
  res.diagram.shape = baseP;
  res.diagram.onObjects.resize(n);
  for (int c = 0; c < n; ++c) res.diagram.onObjects[c] = res.coends[c].category;
  res.diagram.onOne.resize(base.numOne());
  for (int h = 0; h < base.numOne(); ++h) {
    const OneCell& hc = base.one(h);
    const CowedgeResult& dom = res.coends[hc.src];
    const CowedgeResult& cod = res.coends[hc.dst];
    Funct& r = res.diagram.onOne[h];
    r.dom = dom.category;
    r.cod = cod.category;
    r.objMap.resize(dom.category->numObjects());
    r.morMap.resize(dom.category->numMors());
    auto imageObj = [&](int a, int valObj) {
      const ProductResult& pr = prods[idx3(hc.src, a, a)];
      int p = oneOf(pr, pr.objComponents[valObj][0]);
      int x = pr.objComponents[valObj][1];
      const ProductResult& target = prods[idx3(hc.dst, a, a)];
      return std::pair<int, std::string>{
          a, pair_id(base.objectId(a),
                     target.cat->objectId(target.objOf(
                         {target.projections[0].cod->objIndexChecked(
                              base.one(base.composeOne(h, p)).id),
                          x})))};
    };
    for (int o = 0; o < dom.category->numObjects(); ++o) {
      auto [a, valObj] = dom.objData[o];
      r.objMap[o] = cod.category->objIndexChecked(imageObj(a, valObj).second);
    }
    for (int m = 0; m < dom.category->numMors(); ++m) {
      const Mor& mm = dom.category->mor(m);
      auto [g, phi] = dom.morData[m];
      auto [srcA, srcVal] = dom.objData[mm.src];
      auto [dstA, dstVal] = dom.objData[mm.dst];
      (void)srcVal;
      (void)dstVal;
      // phi = (identity on the hom part, phi2) in S(srcA, dstA); its image
      // keeps phi2 and postcomposes the hom part with h
      const ProductResult& mid = prods[idx3(hc.src, srcA, dstA)];
      int homComp = mid.morComponents[phi][0];
      int fComp = mid.morComponents[phi][1];
      const ProductResult& target = prods[idx3(hc.dst, srcA, dstA)];
      int homObj = mid.projections[0].cod->mor(homComp).src;  // identity in a discrete category
      int p = base.oneIndexChecked(mid.projections[0].cod->objectId(homObj));
      int imgHomObj =
          target.projections[0].cod->objIndexChecked(base.one(base.composeOne(h, p)).id);
      int imgPhi = target.morOf({target.projections[0].cod->identity(imgHomObj), fComp});
      r.morMap[m] = cod.category->morIndexChecked(
          arrow_id(cod.category->objectId(r.objMap[mm.src]),
                   cod.category->objectId(r.objMap[mm.dst]),
                   pair_id(base.one(g).id, target.cat->mor(imgPhi).id)));
    }
  }
  res.diagram.onTwo.resize(base.numTwo());
  for (int u = 0; u < base.numTwo(); ++u)
    res.diagram.onTwo[u] = identity_natt(res.diagram.onOne[base.two(u).src]);
  return res;
}

FlatResult flat_of(const DiagPtr& fp, EndMode mode, Budget& budget) {
  const TwoFunctorToCat& F = *fp;
  if (F.variance != Variance::Covariant)
    throw ContractError("flat_of: diagram must be covariant");
  if (mode != EndMode::Lax && mode != EndMode::Pseudo)
    throw ContractError("flat_of: mode must be lax or pseudo");
  const TwoCatPtr& baseP = F.base;
  const Fin2Cat& base = *baseP;

  TwoFunctorToCat hom = hom_2functor(baseP, budget);
  SquareView homView(hom);

  std::vector<FunctorCatResult> cells(static_cast<size_t>(base.numObjects()) * base.numObjects() *
                                      base.numObjects());
  auto idx3 = [&](int a, int b, int c) {
    return (a * base.numObjects() + b) * base.numObjects() + c;
  };
  for (int a = 0; a < base.numObjects(); ++a)
    for (int b = 0; b < base.numObjects(); ++b)
      for (int c = 0; c < base.numObjects(); ++c)
        cells[idx3(a, b, c)] = functor_category(homView.value(c, a), F.onObjects[b], budget);

  TwoFunctorToCat integrand = make_triple_diagram(
      baseP, baseP, budget,
      [&](int a, int b, int c) { return cells[idx3(a, b, c)].cat; },
      [&](int f, int g, int h) {
        const OneCell& fc = base.one(f);
        const OneCell& gc = base.one(g);
        const OneCell& hc = base.one(h);
        return functor_cat_action(cells[idx3(fc.dst, gc.src, hc.src)],
                                  cells[idx3(fc.src, gc.dst, hc.dst)], homView.act(h, f),
                                  F.onOne[g]);
      },
      [&](int u, int w, int z) {
        const TwoCell& ucell = base.two(u);
        const TwoCell& wcell = base.two(w);
        const TwoCell& zcell = base.two(z);
        const OneCell& f0 = base.one(ucell.src);
        const OneCell& g0 = base.one(wcell.src);
        const OneCell& h0 = base.one(zcell.src);
        return functor_cat_action_2cell(
            cells[idx3(f0.dst, g0.src, h0.src)], cells[idx3(f0.src, g0.dst, h0.dst)],
            homView.act(zcell.src, ucell.src), F.onOne[wcell.src],
            homView.act(zcell.dst, ucell.dst), F.onOne[wcell.dst], homView.act2(z, u),
            F.onTwo[w]);
      });

  FlatResult res;
  res.numObjects = base.numObjects();
  res.cells = std::move(cells);
  res.parts = partial_end(share(std::move(integrand)), mode, budget);
  res.diagram = res.parts.diagram;
  return res;
}

LaxTransformation unit_sharp(const DiagPtr& fp, const SharpResult& sharp) {
  const TwoFunctorToCat& F = *fp;
  const Fin2Cat& base = *F.base;
  LaxTransformation eta;
  eta.source = fp;
  eta.target = share(sharp.diagram);

  eta.components.resize(base.numObjects());
  for (int c = 0; c < base.numObjects(); ++c) {
    const FinCat& fc = *F.onObjects[c];
    const CatPtr& total = sharp.coends[c].category;
    Funct& comp = eta.components[c];
    comp.dom = F.onObjects[c];
    comp.cod = total;
    comp.objMap.resize(fc.numObjects());
    comp.morMap.resize(fc.numMors());
    const std::string idOneId = base.one(base.idOne(c)).id;
    const std::string idTwoId = base.two(base.idTwo(base.idOne(c))).id;
    for (int x = 0; x < fc.numObjects(); ++x)
      comp.objMap[x] = total->objIndexChecked(
          pair_id(base.objectId(c), pair_id(idOneId, fc.objectId(x))));
    for (int m = 0; m < fc.numMors(); ++m) {
      const Mor& mm = fc.mor(m);
      comp.morMap[m] = total->morIndexChecked(arrow_id(
          total->objectId(comp.objMap[mm.src]), total->objectId(comp.objMap[mm.dst]),
          pair_id(idOneId, pair_id(idTwoId, mm.id))));
    }
  }

  eta.structure.resize(base.numOne());
  for (int f = 0; f < base.numOne(); ++f) {
    const OneCell& fcell = base.one(f);
    NatT& st = eta.structure[f];
    st.src = compose_funct(sharp.diagram.onOne[f], eta.components[fcell.src]);
    st.dst = compose_funct(eta.components[fcell.dst], F.onOne[f]);
    const FinCat& fc = *F.onObjects[fcell.src];
    const CatPtr& total = sharp.coends[fcell.dst].category;
    st.comp.resize(fc.numObjects());
    const std::string srcObjId = base.objectId(fcell.src);
    for (int x = 0; x < fc.numObjects(); ++x) {
      // (f, identity on (f, F f x)) : (A,(f,x)) -> (B,(1_B, F f x))
      int fx = F.onOne[f].objMap[x];
      const FinCat& valSrc = *F.onObjects[fcell.src];
      (void)valSrc;
      const std::string srcPair =
          pair_id(srcObjId, pair_id(fcell.id, F.onObjects[fcell.src]->objectId(x)));
      const std::string dstPair =
          pair_id(base.objectId(fcell.dst),
                  pair_id(base.one(base.idOne(fcell.dst)).id,
                          F.onObjects[fcell.dst]->objectId(fx)));
      const std::string idTwoF = base.two(base.idTwo(f)).id;
      st.comp[x] = total->morIndexChecked(
          arrow_id(srcPair, dstPair,
                   pair_id(fcell.id,
                           pair_id(idTwoF, F.onObjects[fcell.dst]->mor(
                                               F.onObjects[fcell.dst]->identity(fx)).id))));
    }
  }
  return eta;
}

LaxTransformation counit_flat(const DiagPtr& fp, const FlatResult& flat) {
  const TwoFunctorToCat& F = *fp;
  const Fin2Cat& base = *F.base;
  LaxTransformation eps;
  eps.source = share(flat.diagram);
  eps.target = fp;

  // evaluation of the family component at C on the identity 1-cell
  auto idIndexAt = [&](int c) {
    return flat.cell(c, c, c).objFunctors.empty()
               ? 0
               : flat.cell(c, c, c).objFunctors[0].dom->objIndexChecked(
                     base.one(base.idOne(c)).id);
  };

  eps.components.resize(base.numObjects());
  for (int c = 0; c < base.numObjects(); ++c) {
    const EndResult& end = flat.parts.ends[c];
    const FunctorCatResult& diagCell = flat.cell(c, c, c);
    int idIdx = idIndexAt(c);
    Funct& comp = eps.components[c];
    comp.dom = end.category;
    comp.cod = F.onObjects[c];
    comp.objMap.resize(end.category->numObjects());
    comp.morMap.resize(end.category->numMors());
    for (int z = 0; z < end.category->numObjects(); ++z)
      comp.objMap[z] = diagCell.objFunctors[end.families[z].perObject[c]].objMap[idIdx];
    for (int m = 0; m < end.category->numMors(); ++m)
      comp.morMap[m] = diagCell.morNatts[end.morComponents[m][c]].comp[idIdx];
  }

  eps.structure.resize(base.numOne());
  for (int f = 0; f < base.numOne(); ++f) {
    const OneCell& fc = base.one(f);
    NatT& st = eps.structure[f];
    st.src = compose_funct(F.onOne[f], eps.components[fc.src]);
    st.dst = compose_funct(eps.components[fc.dst], flat.diagram.onOne[f]);
    const EndResult& end = flat.parts.ends[fc.src];
    const FunctorCatResult& offCell = flat.cell(fc.src, fc.dst, fc.src);
    int idIdx = idIndexAt(fc.src);
    st.comp.resize(end.category->numObjects());
    for (int z = 0; z < end.category->numObjects(); ++z)
      st.comp[z] = offCell.morNatts[end.families[z].perOne[f]].comp[idIdx];
  }
  return eps;
}

namespace {

// composite of a strict transformation into the classifier with the unit:
// (sigma . eta)_A = sigma_A . eta_A with pasted structure cells.
LaxTransformation compose_after_unit(const LaxTransformation& sigma, const LaxTransformation& eta) {
  LaxTransformation r;
  r.source = eta.source;
  r.target = sigma.target;
  const Fin2Cat& base = *eta.source->shape;
  r.components.resize(base.numObjects());
  for (int o = 0; o < base.numObjects(); ++o)
    r.components[o] = compose_funct(sigma.components[o], eta.components[o]);
  r.structure.resize(base.numOne());
  for (int f = 0; f < base.numOne(); ++f) {
    const OneCell& fc = base.one(f);
    // H f . sigma_A . eta_A = sigma_B . Fs f . eta_A --sigma_B * eta_f--> sigma_B . eta_B . F f
    NatT whiskered = whisker_left(sigma.components[fc.dst], eta.structure[f]);
    NatT strictPart = whisker_right(sigma.structure[f], eta.components[fc.src]);
    r.structure[f] = vcomp(whiskered, strictPart);
  }
  return r;
}

LaxTransformation compose_before_counit(const LaxTransformation& eps,
                                        const LaxTransformation& sigma) {
  LaxTransformation r;
  r.source = sigma.source;
  r.target = eps.target;
  const Fin2Cat& base = *sigma.source->shape;
  r.components.resize(base.numObjects());
  for (int o = 0; o < base.numObjects(); ++o)
    r.components[o] = compose_funct(eps.components[o], sigma.components[o]);
  r.structure.resize(base.numOne());
  for (int f = 0; f < base.numOne(); ++f) {
    const OneCell& fc = base.one(f);
    NatT whiskered = whisker_right(eps.structure[f], sigma.components[fc.src]);
    NatT strictPart = whisker_left(eps.components[fc.dst], sigma.structure[f]);
    r.structure[f] = vcomp(strictPart, whiskered);
  }
  return r;
}

}  // namespace

AdjunctionReport check_adjunction(const DiagPtr& f, const DiagPtr& h, AdjunctionSide side,
                                  Budget& budget) {
  AdjunctionReport rep;
  if (side == AdjunctionSide::Sharp) {
    SharpResult sharp = sharp_of(f, budget);
    DiagPtr sharpD = share(sharp.diagram);
    LaxTransformation eta = unit_sharp(f, sharp);
    // the unit must itself be a lax transformation
    ValidationReport vr = validate_lax_transformation(eta, TransMode::Lax);
    if (!vr.ok()) throw ContractError("check_adjunction: unit invalid:\n" + vr.joined());
    eta.target = sharpD;

    LaxHomResult left = lax_hom_category(f, h, TransMode::Lax, budget);
    LaxHomResult right = lax_hom_category(sharpD, h, TransMode::Strict, budget);
    rep.leftHom = left.cat;
    rep.rightHom = right.cat;

    rep.comparison.dom = right.cat;
    rep.comparison.cod = left.cat;
    rep.comparison.objMap.resize(right.cat->numObjects());
    rep.comparison.morMap.resize(right.cat->numMors());
    for (int o = 0; o < right.cat->numObjects(); ++o) {
      LaxTransformation composite = compose_after_unit(right.objTransformations[o], eta);
      composite.source = f;
      composite.target = h;
      rep.comparison.objMap[o] = left.cat->objIndexChecked(composite.canonicalId());
    }
    for (int m = 0; m < right.cat->numMors(); ++m) {
      const Modification& mod = right.morModifications[m];
      Modification img;
      img.source = left.objTransformations[rep.comparison.objMap[right.cat->mor(m).src]];
      img.target = left.objTransformations[rep.comparison.objMap[right.cat->mor(m).dst]];
      img.components.resize(mod.components.size());
      for (size_t o = 0; o < mod.components.size(); ++o)
        img.components[o] = whisker_right(mod.components[o], eta.components[o]);
      rep.comparison.morMap[m] = left.cat->morIndexChecked(img.canonicalId());
    }
  } else {
    FlatResult flat = flat_of(f, EndMode::Lax, budget);
    DiagPtr flatD = share(flat.diagram);
    LaxTransformation eps = counit_flat(f, flat);
    ValidationReport vr = validate_lax_transformation(eps, TransMode::Lax);
    if (!vr.ok()) throw ContractError("check_adjunction: counit invalid:\n" + vr.joined());

    LaxHomResult left = lax_hom_category(h, f, TransMode::Lax, budget);
    LaxHomResult right = lax_hom_category(h, flatD, TransMode::Strict, budget);
    rep.leftHom = left.cat;
    rep.rightHom = right.cat;

    rep.comparison.dom = right.cat;
    rep.comparison.cod = left.cat;
    rep.comparison.objMap.resize(right.cat->numObjects());
    rep.comparison.morMap.resize(right.cat->numMors());
    for (int o = 0; o < right.cat->numObjects(); ++o) {
      LaxTransformation composite = compose_before_counit(eps, right.objTransformations[o]);
      composite.source = h;
      composite.target = f;
      rep.comparison.objMap[o] = left.cat->objIndexChecked(composite.canonicalId());
    }
    for (int m = 0; m < right.cat->numMors(); ++m) {
      const Modification& mod = right.morModifications[m];
      Modification img;
      img.source = left.objTransformations[rep.comparison.objMap[right.cat->mor(m).src]];
      img.target = left.objTransformations[rep.comparison.objMap[right.cat->mor(m).dst]];
      img.components.resize(mod.components.size());
      for (size_t o = 0; o < mod.components.size(); ++o)
        img.components[o] = whisker_left(eps.components[o], mod.components[o]);
      rep.comparison.morMap[m] = left.cat->morIndexChecked(img.canonicalId());
    }
  }

  // isomorphism of categories = bijective on objects and morphisms
  std::vector<int> objHit(rep.comparison.cod->numObjects(), 0);
  std::vector<int> morHit(rep.comparison.cod->numMors(), 0);
  for (int32_t o : rep.comparison.objMap) ++objHit[o];
  for (int32_t m : rep.comparison.morMap) ++morHit[m];
  bool ok = rep.comparison.dom->numObjects() == rep.comparison.cod->numObjects() &&
            rep.comparison.dom->numMors() == rep.comparison.cod->numMors();
  for (int v : objHit) ok = ok && v == 1;
  for (int v : morHit) ok = ok && v == 1;
  rep.iso = ok;
  if (!ok)
    rep.diagnostics = "comparison functor is not bijective: left (" +
                      std::to_string(rep.comparison.cod->numObjects()) + "," +
                      std::to_string(rep.comparison.cod->numMors()) + ") right (" +
                      std::to_string(rep.comparison.dom->numObjects()) + "," +
                      std::to_string(rep.comparison.dom->numMors()) + ")";
  return rep;
}

YonedaCheck yoneda_equivalence_check(const DiagPtr& f, const std::string& objId, Budget& budget) {
  FlatResult flat = flat_of(f, EndMode::Pseudo, budget);
  int obj = f->base->objIndexChecked(objId);
  YonedaCheck res;
  res.flatValue = flat.diagram.onObjects[obj];
  res.directValue = f->onObjects[obj];
  res.equivalent = is_equivalent(res.flatValue, res.directValue, budget).has_value();
  return res;
}

}  // namespace lendkit
