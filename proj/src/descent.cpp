#include "lendkit/descent.hpp"

#include "lendkit/cat_ops.hpp"

namespace lendkit {

ValidationReport validate_coherence(const CoherenceData& cd) {
  ValidationReport rep;
  auto checkFun = [&](const Funct& f, const CatPtr& dom, const CatPtr& cod, const char* name) {
    if (!same_category(f.dom, dom) || !same_category(f.cod, cod)) {
      rep.add(std::string("coherence: functor ") + name + " has wrong endpoints");
      return;
    }
    ValidationReport fr = validate_funct(f);
    for (auto& p : fr.problems) rep.add(std::string("coherence functor ") + name + ": " + p);
  };
  checkFun(cd.v, cd.x1, cd.x2, "v");
  checkFun(cd.w, cd.x1, cd.x2, "w");
  checkFun(cd.i, cd.x2, cd.x1, "i");
  checkFun(cd.r, cd.x2, cd.x3, "r");
  checkFun(cd.s, cd.x2, cd.x3, "s");
  checkFun(cd.t, cd.x2, cd.x3, "t");
  if (!rep.ok()) return rep;

  Funct id1 = identity_funct(cd.x1);
  if (!(compose_funct(cd.i, cd.v) == id1)) rep.add("coherence equality delta fails: i.v != 1");
  if (!(compose_funct(cd.i, cd.w) == id1)) rep.add("coherence equality gamma fails: 1 != i.w");
  if (!(compose_funct(cd.r, cd.v) == compose_funct(cd.s, cd.v)))
    rep.add("coherence equality kappa fails: r.v != s.v");
  if (!(compose_funct(cd.t, cd.w) == compose_funct(cd.s, cd.w)))
    rep.add("coherence equality lambda fails: t.w != s.w");
  if (!(compose_funct(cd.r, cd.w) == compose_funct(cd.t, cd.v)))
    rep.add("coherence equality rho fails: r.w != t.v");
  return rep;
}

DescentObject descent_object(const CoherenceData& cd, Budget& budget) {
  ValidationReport rep = validate_coherence(cd);
  if (!rep.ok()) throw ContractError("descent_object: invalid coherence data:\n" + rep.joined());

  InserterResult ins = inserter(cd.v, cd.w, budget);

  // small equality: i-whiskered zeta must be the identity on the projection
  NatT small = whisker_left(cd.i, ins.inserted);
  SubcatResult eq1 = equifier(small, identity_natt(ins.projection));
  Funct a1 = compose_funct(ins.projection, eq1.inclusion);
  NatT zeta1 = whisker_right(ins.inserted, eq1.inclusion);

  // large equality: (t zeta) . (r zeta) == s zeta
  NatT lhs = vcomp(whisker_left(cd.t, zeta1), whisker_left(cd.r, zeta1));
  NatT rhs = whisker_left(cd.s, zeta1);
  SubcatResult eq2 = equifier(lhs, rhs);

  DescentObject d;
  d.category = eq2.cat;
  d.x = compose_funct(a1, eq2.inclusion);
  d.xi = whisker_right(zeta1, eq2.inclusion);
  return d;
}

namespace {

// Transpose of T(A,-) or T(-,B): an object x of T(A,A) becomes the functor
// hom -> T(A,B) evaluating the diagram action at x.
struct Transpose {
  CatPtr hom;   // local hom category
  CatPtr codV;  // T(A,B)
  // for each hom object (a 1-cell) the acting functor, for each hom morphism
  // (a 2-cell) the acting transformation
  std::vector<Funct> actF;
  std::vector<NatT> actN;

  Funct objectFunctor(int x) const {
    Funct r;
    r.dom = hom;
    r.cod = codV;
    r.objMap.resize(hom->numObjects());
    r.morMap.resize(hom->numMors());
    for (int o = 0; o < hom->numObjects(); ++o) r.objMap[o] = actF[o].objMap[x];
    for (int m = 0; m < hom->numMors(); ++m) r.morMap[m] = actN[m].comp[x];
    return r;
  }
  NatT morphismNatt(int m, int srcX, int dstX) const {
    NatT r;
    r.src = objectFunctor(srcX);
    r.dst = objectFunctor(dstX);
    r.comp.resize(hom->numObjects());
    for (int o = 0; o < hom->numObjects(); ++o) r.comp[o] = actF[o].morMap[m];
    return r;
  }
};

// Action family of hom(x,y) cells with the contravariant slot pinned at p:
// g |-> T(1_p, g) : T(p,x) -> T(p,y).
Transpose covariant_transpose(const SquareView& view, int pin, int x, int y) {
  const Fin2Cat& base = view.base();
  Transpose tr;
  tr.hom = base.localHom(x, y);
  tr.codV = view.value(pin, y);
  tr.actF.resize(tr.hom->numObjects());
  tr.actN.resize(tr.hom->numMors());
  for (int o = 0; o < tr.hom->numObjects(); ++o) {
    int f = base.oneIndexChecked(tr.hom->objectId(o));
    tr.actF[o] = view.act(base.idOne(pin), f);
  }
  for (int m = 0; m < tr.hom->numMors(); ++m) {
    int u = base.twoIndexChecked(tr.hom->mor(m).id);
    tr.actN[m] = view.act2(base.idTwo(base.idOne(pin)), u);
  }
  return tr;
}

// Action family with the covariant slot pinned at p:
// f |-> T(f, 1_p) : T(y,p) -> T(x,p).
Transpose contravariant_transpose(const SquareView& view, int pin, int x, int y) {
  const Fin2Cat& base = view.base();
  Transpose tr;
  tr.hom = base.localHom(x, y);
  tr.codV = view.value(x, pin);
  tr.actF.resize(tr.hom->numObjects());
  tr.actN.resize(tr.hom->numMors());
  for (int o = 0; o < tr.hom->numObjects(); ++o) {
    int f = base.oneIndexChecked(tr.hom->objectId(o));
    tr.actF[o] = view.act(f, base.idOne(pin));
  }
  for (int m = 0; m < tr.hom->numMors(); ++m) {
    int u = base.twoIndexChecked(tr.hom->mor(m).id);
    tr.actN[m] = view.act2(u, base.idTwo(base.idOne(pin)));
  }
  return tr;
}

// Functor T(A,A) -> [hom, T(A,B)] induced by a transpose, with the functor
// category supplied for index lookup.
Funct transpose_functor(const Transpose& tr, const CatPtr& source, const FunctorCatResult& fc) {
  Funct r;
  r.dom = source;
  r.cod = fc.cat;
  r.objMap.resize(source->numObjects());
  r.morMap.resize(source->numMors());
  for (int x = 0; x < source->numObjects(); ++x)
    r.objMap[x] = fc.cat->objIndexChecked(tr.objectFunctor(x).canonicalId());
  for (int m = 0; m < source->numMors(); ++m)
    r.morMap[m] = fc.cat->morIndexChecked(
        tr.morphismNatt(m, source->mor(m).src, source->mor(m).dst).canonicalId());
  return r;
}

}  // namespace

CoherenceFromDiagram coherence_from_diagram(const DiagPtr& t, Budget& budget) {
  if (t->variance != Variance::OpFirst)
    throw ContractError("coherence_from_diagram: diagram must be over A^op x A");
  SquareView view(*t);
  const Fin2Cat& base = *t->base;
  const int n = base.numObjects();

  CoherenceFromDiagram out;

  // X1 = prod_A T(A,A)
  std::vector<CatPtr> diag(n);
  for (int a = 0; a < n; ++a) diag[a] = view.value(a, a);
  ProductResult x1 = product_cat_indexed(diag, budget);
  out.data.x1 = x1.cat;
  out.x1Projections = x1.projections;

  // X2 = prod_{A,B} [hom(A,B), T(A,B)]
  std::vector<FunctorCatResult> x2Factors;
  std::vector<CatPtr> x2Cats;
  out.x2FactorOf.assign(n, std::vector<int32_t>(n, -1));
  std::vector<Transpose> covTr, conTr;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Transpose cov = covariant_transpose(view, a, a, b);
      Transpose con = contravariant_transpose(view, b, a, b);
      FunctorCatResult fc = functor_category(cov.hom, view.value(a, b), budget);
      out.x2FactorOf[a][b] = static_cast<int32_t>(x2Factors.size());
      x2Cats.push_back(fc.cat);
      x2Factors.push_back(std::move(fc));
      covTr.push_back(std::move(cov));
      conTr.push_back(std::move(con));
    }
  ProductResult x2 = product_cat_indexed(x2Cats, budget);
  out.data.x2 = x2.cat;
  out.x2Projections = x2.projections;
  for (const auto& fc : x2Factors) {
    out.x2FactorFunctors.push_back(fc.objFunctors);
    out.x2FactorNatts.push_back(fc.morNatts);
  }

  // X3 = prod_{A,B,C} [hom(B,C) x hom(A,B), T(A,C)]
  struct X3Factor {
    int a, b, c;
    ProductResult homProd;  // hom(B,C) x hom(A,B)
    FunctorCatResult fc;
  };
  std::vector<X3Factor> x3Factors;
  std::vector<CatPtr> x3Cats;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        X3Factor fac;
        fac.a = a;
        fac.b = b;
        fac.c = c;
        fac.homProd = product_cat_indexed({base.localHom(b, c), base.localHom(a, b)}, budget);
        fac.fc = functor_category(fac.homProd.cat, view.value(a, c), budget);
        x3Cats.push_back(fac.fc.cat);
        x3Factors.push_back(std::move(fac));
      }
  ProductResult x3 = product_cat_indexed(x3Cats, budget);
  out.data.x3 = x3.cat;

  // v, w : X1 -> X2 factorwise via the transposes
  {
    std::vector<Funct> vLegs, wLegs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int fi = out.x2FactorOf[a][b];
        vLegs.push_back(compose_funct(transpose_functor(covTr[fi], diag[a], x2Factors[fi]),
                                      x1.projections[a]));
        wLegs.push_back(compose_funct(transpose_functor(conTr[fi], diag[b], x2Factors[fi]),
                                      x1.projections[b]));
      }
    out.data.v = pair_into_product(x2, vLegs);
    out.data.w = pair_into_product(x2, wLegs);
  }

  // i : X2 -> X1, factor A: evaluate the (A,A) component at the identity
  {
    std::vector<Funct> iLegs;
    for (int a = 0; a < n; ++a) {
      int fi = out.x2FactorOf[a][a];
      const FunctorCatResult& fc = x2Factors[fi];
      // index of 1_A inside hom(A,A)
      int idIdx = covTr[fi].hom->objIndexChecked(base.one(base.idOne(a)).id);
      Funct ev;
      ev.dom = fc.cat;
      ev.cod = diag[a];
      ev.objMap.resize(fc.cat->numObjects());
      ev.morMap.resize(fc.cat->numMors());
      for (int o = 0; o < fc.cat->numObjects(); ++o) ev.objMap[o] = fc.objFunctors[o].objMap[idIdx];
      for (int m = 0; m < fc.cat->numMors(); ++m) ev.morMap[m] = fc.morNatts[m].comp[idIdx];
      iLegs.push_back(compose_funct(ev, x2.projections[fi]));
    }
    out.data.i = pair_into_product(x1, iLegs);
  }

  // r, s, t : X2 -> X3 factorwise
  {
    std::vector<Funct> rLegs, sLegs, tLegs;
    for (const X3Factor& fac : x3Factors) {
      const FunctorCatResult& target = fac.fc;
      const CatPtr& homBC = fac.homProd.projections[0].cod;
      const CatPtr& homAB = fac.homProd.projections[1].cod;

      // r: from the (A,B) component, postcompose with T(A,-) of the first leg
      {
        int fi = out.x2FactorOf[fac.a][fac.b];
        const FunctorCatResult& sourceFc = x2Factors[fi];
        // g in hom(B,C) |-> T(1_A, g) : T(A,B) -> T(A,C)
        Transpose covBC = covariant_transpose(view, fac.a, fac.b, fac.c);
        // phi |-> ((g,f) |-> T(1,g)(phi f))
        Funct leg;
        leg.dom = sourceFc.cat;
        leg.cod = target.cat;
        leg.objMap.resize(sourceFc.cat->numObjects());
        leg.morMap.resize(sourceFc.cat->numMors());
        auto buildObj = [&](const Funct& phi) {
          Funct psi;
          psi.dom = fac.homProd.cat;
          psi.cod = view.value(fac.a, fac.c);
          psi.objMap.resize(fac.homProd.cat->numObjects());
          psi.morMap.resize(fac.homProd.cat->numMors());
          for (int o = 0; o < fac.homProd.cat->numObjects(); ++o) {
            auto& parts = fac.homProd.objComponents[o];
            int gIdx = parts[0];  // object of hom(B,C)
            int fIdx = parts[1];
            psi.objMap[o] = covBC.actF[gIdx].objMap[phi.objMap[fIdx]];
          }
          for (int m = 0; m < fac.homProd.cat->numMors(); ++m) {
            auto& parts = fac.homProd.morComponents[m];
            int beta = parts[0];  // morphism of hom(B,C)
            int alpha = parts[1];
            const Mor& betaM = homBC->mor(beta);
            const Mor& alphaM = homAB->mor(alpha);
            // eval of (T(1,beta), phi alpha): T(1,beta)_{phi f'} . T(1,g)(phi alpha)
            int first = covBC.actF[betaM.src].morMap[phi.morMap[alpha]];
            int second = covBC.actN[beta].comp[phi.objMap[alphaM.dst]];
            psi.morMap[m] = psi.cod->compose(second, first);
          }
          return psi;
        };
        for (int o = 0; o < sourceFc.cat->numObjects(); ++o)
          leg.objMap[o] = target.cat->objIndexChecked(buildObj(sourceFc.objFunctors[o]).canonicalId());
        for (int m = 0; m < sourceFc.cat->numMors(); ++m) {
          const NatT& theta = sourceFc.morNatts[m];
          NatT img;
          img.src = buildObj(theta.src);
          img.dst = buildObj(theta.dst);
          img.comp.resize(fac.homProd.cat->numObjects());
          for (int o = 0; o < fac.homProd.cat->numObjects(); ++o) {
            auto& parts = fac.homProd.objComponents[o];
            img.comp[o] = covBC.actF[parts[0]].morMap[theta.comp[parts[1]]];
          }
          leg.morMap[m] = target.cat->morIndexChecked(img.canonicalId());
        }
        rLegs.push_back(compose_funct(leg, x2.projections[fi]));
      }

      // s: from the (A,C) component, precompose with composition
      {
        int fi = out.x2FactorOf[fac.a][fac.c];
        const FunctorCatResult& sourceFc = x2Factors[fi];
        CatPtr homAC = covTr[fi].hom;
        Funct leg;
        leg.dom = sourceFc.cat;
        leg.cod = target.cat;
        leg.objMap.resize(sourceFc.cat->numObjects());
        leg.morMap.resize(sourceFc.cat->numMors());
        // composition functor data on the hom product
        std::vector<int32_t> compObj(fac.homProd.cat->numObjects());
        std::vector<int32_t> compMor(fac.homProd.cat->numMors());
        for (int o = 0; o < fac.homProd.cat->numObjects(); ++o) {
          auto& parts = fac.homProd.objComponents[o];
          int g = base.oneIndexChecked(homBC->objectId(parts[0]));
          int f = base.oneIndexChecked(homAB->objectId(parts[1]));
          compObj[o] = homAC->objIndexChecked(base.one(base.composeOne(g, f)).id);
        }
        for (int m = 0; m < fac.homProd.cat->numMors(); ++m) {
          auto& parts = fac.homProd.morComponents[m];
          int bb = base.twoIndexChecked(homBC->mor(parts[0]).id);
          int aa = base.twoIndexChecked(homAB->mor(parts[1]).id);
          compMor[m] = homAC->morIndexChecked(base.two(base.hcomp(bb, aa)).id);
        }
        auto buildObj = [&](const Funct& phi) {
          Funct psi;
          psi.dom = fac.homProd.cat;
          psi.cod = view.value(fac.a, fac.c);
          psi.objMap.resize(fac.homProd.cat->numObjects());
          psi.morMap.resize(fac.homProd.cat->numMors());
          for (int o = 0; o < fac.homProd.cat->numObjects(); ++o)
            psi.objMap[o] = phi.objMap[compObj[o]];
          for (int m = 0; m < fac.homProd.cat->numMors(); ++m)
            psi.morMap[m] = phi.morMap[compMor[m]];
          return psi;
        };
        for (int o = 0; o < sourceFc.cat->numObjects(); ++o)
          leg.objMap[o] = target.cat->objIndexChecked(buildObj(sourceFc.objFunctors[o]).canonicalId());
        for (int m = 0; m < sourceFc.cat->numMors(); ++m) {
          const NatT& theta = sourceFc.morNatts[m];
          NatT img;
          img.src = buildObj(theta.src);
          img.dst = buildObj(theta.dst);
          img.comp.resize(fac.homProd.cat->numObjects());
          for (int o = 0; o < fac.homProd.cat->numObjects(); ++o)
            img.comp[o] = theta.comp[compObj[o]];
          leg.morMap[m] = target.cat->morIndexChecked(img.canonicalId());
        }
        sLegs.push_back(compose_funct(leg, x2.projections[fi]));
      }

      // t: from the (B,C) component, postcompose with T(-,C) of the second leg
      {
        int fi = out.x2FactorOf[fac.b][fac.c];
        const FunctorCatResult& sourceFc = x2Factors[fi];
        // f in hom(A,B) |-> T(f, 1_C) : T(B,C) -> T(A,C)
        Transpose conAB = contravariant_transpose(view, fac.c, fac.a, fac.b);
        auto buildObj = [&](const Funct& phi) {
          Funct psi;
          psi.dom = fac.homProd.cat;
          psi.cod = view.value(fac.a, fac.c);
          psi.objMap.resize(fac.homProd.cat->numObjects());
          psi.morMap.resize(fac.homProd.cat->numMors());
          for (int o = 0; o < fac.homProd.cat->numObjects(); ++o) {
            auto& parts = fac.homProd.objComponents[o];
            psi.objMap[o] = conAB.actF[parts[1]].objMap[phi.objMap[parts[0]]];
          }
          for (int m = 0; m < fac.homProd.cat->numMors(); ++m) {
            auto& parts = fac.homProd.morComponents[m];
            const Mor& betaM = homBC->mor(parts[0]);
            const Mor& alphaM = homAB->mor(parts[1]);
            // T(alpha,1)_{phi g'} . T(f,1)(phi beta)
            int first = conAB.actF[alphaM.src].morMap[phi.morMap[parts[0]]];
            int second = conAB.actN[parts[1]].comp[phi.objMap[betaM.dst]];
            psi.morMap[m] = psi.cod->compose(second, first);
          }
          return psi;
        };
        Funct leg;
        leg.dom = sourceFc.cat;
        leg.cod = target.cat;
        leg.objMap.resize(sourceFc.cat->numObjects());
        leg.morMap.resize(sourceFc.cat->numMors());
        for (int o = 0; o < sourceFc.cat->numObjects(); ++o)
          leg.objMap[o] = target.cat->objIndexChecked(buildObj(sourceFc.objFunctors[o]).canonicalId());
        for (int m = 0; m < sourceFc.cat->numMors(); ++m) {
          const NatT& theta = sourceFc.morNatts[m];
          NatT img;
          img.src = buildObj(theta.src);
          img.dst = buildObj(theta.dst);
          img.comp.resize(fac.homProd.cat->numObjects());
          for (int o = 0; o < fac.homProd.cat->numObjects(); ++o) {
            auto& parts = fac.homProd.objComponents[o];
            img.comp[o] = conAB.actF[parts[1]].morMap[theta.comp[parts[0]]];
          }
          leg.morMap[m] = target.cat->morIndexChecked(img.canonicalId());
        }
        tLegs.push_back(compose_funct(leg, x2.projections[fi]));
      }
    }
    out.data.r = pair_into_product(x3, rLegs);
    out.data.s = pair_into_product(x3, sLegs);
    out.data.t = pair_into_product(x3, tLegs);
  }
  return out;
}

DescentEnd lax_end_via_descent(const DiagPtr& t, Budget& budget) {
  CoherenceFromDiagram cfd = coherence_from_diagram(t, budget);
  ValidationReport rep = validate_coherence(cfd.data);
  if (!rep.ok())
    throw ContractError("lax_end_via_descent: generated coherence data invalid:\n" + rep.joined());
  DescentObject d = descent_object(cfd.data, budget);

  SquareView view(*t);
  const Fin2Cat& base = *t->base;
  DescentEnd res;
  res.diagram = t;
  res.category = d.category;
  res.wedge.apex = d.category;
  res.wedge.components.resize(base.numObjects());
  for (int a = 0; a < base.numObjects(); ++a)
    res.wedge.components[a] = compose_funct(cfd.x1Projections[a], d.x);

  res.wedge.structure.resize(base.numOne());
  for (int f = 0; f < base.numOne(); ++f) {
    const OneCell& fc = base.one(f);
    int fi = cfd.x2FactorOf[fc.src][fc.dst];
    // xi component at z is a morphism of X2; project to the (A,B) factor and
    // evaluate the resulting transformation at the 1-cell f.
    const Funct& projX2 = cfd.x2Projections[fi];
    CatPtr homAB = base.localHom(fc.src, fc.dst);
    int fIdx = homAB->objIndexChecked(fc.id);
    NatT& st = res.wedge.structure[f];
    st.src = compose_funct(view.covAct(f), res.wedge.components[fc.src]);
    st.dst = compose_funct(view.conAct(f), res.wedge.components[fc.dst]);
    st.comp.resize(d.category->numObjects());
    for (int z = 0; z < d.category->numObjects(); ++z) {
      int x2mor = projX2.morMap[d.xi.comp[z]];
      st.comp[z] = cfd.x2FactorNatts[fi][x2mor].comp[fIdx];
    }
  }
  return res;
}

}  // namespace lendkit
