#include "lendkit/diagram.hpp"

namespace lendkit {

std::string variance_name(Variance v) {
  switch (v) {
    case Variance::Covariant: return "covariant";
    case Variance::OpFirst: return "op-first";
    case Variance::OpFirstExtra: return "op-first-extra";
  }
  return "covariant";
}

Variance variance_from_name(const std::string& s) {
  if (s == "covariant") return Variance::Covariant;
  if (s == "op-first") return Variance::OpFirst;
  if (s == "op-first-extra") return Variance::OpFirstExtra;
  throw InputError("unknown variance: " + s);
}

TwoCatPtr square_shape(const TwoCatPtr& base, Budget& budget) {
  return product_2cat(dualize_2cat(*base, DualMode::Op), base, budget);
}

TwoCatPtr triple_shape(const TwoCatPtr& base, const TwoCatPtr& extra, Budget& budget) {
  return product_2cat(square_shape(base, budget), extra, budget);
}

ValidationReport validate_2functor(const TwoFunctorToCat& t) {
  ValidationReport rep;
  const Fin2Cat& s = *t.shape;
  if (static_cast<int>(t.onObjects.size()) != s.numObjects() ||
      static_cast<int>(t.onOne.size()) != s.numOne() ||
      static_cast<int>(t.onTwo.size()) != s.numTwo()) {
    rep.add("2-functor: table sizes do not match the shape");
    return rep;
  }
  for (int f = 0; f < s.numOne(); ++f) {
    const Funct& im = t.onOne[f];
    if (!same_category(im.dom, t.onObjects[s.one(f).src]) ||
        !same_category(im.cod, t.onObjects[s.one(f).dst]))
      rep.add("2-functor: 1-cell image endpoints wrong at " + s.one(f).id);
    ValidationReport fr = validate_funct(im);
    for (auto& p : fr.problems) rep.add("2-functor at " + s.one(f).id + ": " + p);
  }
  for (int u = 0; u < s.numTwo(); ++u) {
    const NatT& im = t.onTwo[u];
    if (!(im.src == t.onOne[s.two(u).src]) || !(im.dst == t.onOne[s.two(u).dst]))
      rep.add("2-functor: 2-cell image endpoints wrong at " + s.two(u).id);
    ValidationReport nr = validate_natt(im);
    for (auto& p : nr.problems) rep.add("2-functor at " + s.two(u).id + ": " + p);
  }
  if (!rep.ok()) return rep;

  for (int o = 0; o < s.numObjects(); ++o) {
    if (!(t.onOne[s.idOne(o)] == identity_funct(t.onObjects[o])))
      rep.add("2-functor: identity 1-cell image not the identity functor at " + s.objectId(o));
  }
  for (int f = 0; f < s.numOne(); ++f) {
    if (!(t.onTwo[s.idTwo(f)] == identity_natt(t.onOne[f])))
      rep.add("2-functor: identity 2-cell image not the identity at " + s.one(f).id);
  }
  for (int g = 0; g < s.numOne(); ++g)
    for (int f = 0; f < s.numOne(); ++f) {
      int gf = s.composeOne(g, f);
      if (gf < 0) continue;
      if (!(compose_funct(t.onOne[g], t.onOne[f]) == t.onOne[gf]))
        rep.add("2-functor: composition not preserved at (" + s.one(g).id + "," + s.one(f).id + ")");
    }
  for (int b = 0; b < s.numTwo(); ++b)
    for (int a = 0; a < s.numTwo(); ++a) {
      int v = s.vcomp(b, a);
      if (v >= 0 && !(vcomp(t.onTwo[b], t.onTwo[a]) == t.onTwo[v]))
        rep.add("2-functor: vertical composition not preserved at (" + s.two(b).id + "," +
                s.two(a).id + ")");
      int h = s.hcomp(b, a);
      if (h >= 0 && !(hcomp_natt(t.onTwo[b], t.onTwo[a]) == t.onTwo[h]))
        rep.add("2-functor: horizontal composition not preserved at (" + s.two(b).id + "," +
                s.two(a).id + ")");
    }
  return rep;
}

SquareView::SquareView(const TwoFunctorToCat& t) : t_(&t) {
  if (t.variance != Variance::OpFirst)
    throw ContractError("SquareView: diagram is not over A^op x A");
  const Fin2Cat& b = *t.base;
  const Fin2Cat& s = *t.shape;
  nObj_ = b.numObjects();
  nOne_ = b.numOne();
  nTwo_ = b.numTwo();
  obj_.resize(static_cast<size_t>(nObj_) * nObj_);
  one_.resize(static_cast<size_t>(nOne_) * nOne_);
  two_.resize(static_cast<size_t>(nTwo_) * nTwo_);
  for (int a = 0; a < nObj_; ++a)
    for (int c = 0; c < nObj_; ++c)
      obj_[a * nObj_ + c] = s.objIndexChecked(pair_id(b.objectId(a), b.objectId(c)));
  for (int f = 0; f < nOne_; ++f)
    for (int g = 0; g < nOne_; ++g)
      one_[f * nOne_ + g] = s.oneIndexChecked(pair_id(b.one(f).id, b.one(g).id));
  for (int u = 0; u < nTwo_; ++u)
    for (int w = 0; w < nTwo_; ++w)
      two_[u * nTwo_ + w] = s.twoIndexChecked(pair_id(b.two(u).id, b.two(w).id));
}

const Funct& SquareView::covAct(int f) const {
  return act(base().idOne(base().one(f).src), f);
}

const Funct& SquareView::conAct(int f) const {
  return act(f, base().idOne(base().one(f).dst));
}

TripleView::TripleView(const TwoFunctorToCat& t) : t_(&t) {
  if (t.variance != Variance::OpFirstExtra)
    throw ContractError("TripleView: diagram is not over A^op x A x B");
  const Fin2Cat& b = *t.base;
  const Fin2Cat& e = *t.extra;
  const Fin2Cat& s = *t.shape;
  nObj_ = b.numObjects();
  nOne_ = b.numOne();
  nTwo_ = b.numTwo();
  nExtraObj_ = e.numObjects();
  nExtraOne_ = e.numOne();
  nExtraTwo_ = e.numTwo();
  obj_.resize(static_cast<size_t>(nObj_) * nObj_ * nExtraObj_);
  one_.resize(static_cast<size_t>(nOne_) * nOne_ * nExtraOne_);
  two_.resize(static_cast<size_t>(nTwo_) * nTwo_ * nExtraTwo_);
  for (int a = 0; a < nObj_; ++a)
    for (int c = 0; c < nObj_; ++c)
      for (int x = 0; x < nExtraObj_; ++x)
        obj_[(a * nObj_ + c) * nExtraObj_ + x] = s.objIndexChecked(
            pair_id(pair_id(b.objectId(a), b.objectId(c)), e.objectId(x)));
  for (int f = 0; f < nOne_; ++f)
    for (int g = 0; g < nOne_; ++g)
      for (int h = 0; h < nExtraOne_; ++h)
        one_[(f * nOne_ + g) * nExtraOne_ + h] =
            s.oneIndexChecked(pair_id(pair_id(b.one(f).id, b.one(g).id), e.one(h).id));
  for (int u = 0; u < nTwo_; ++u)
    for (int w = 0; w < nTwo_; ++w)
      for (int z = 0; z < nExtraTwo_; ++z)
        two_[(u * nTwo_ + w) * nExtraTwo_ + z] =
            s.twoIndexChecked(pair_id(pair_id(b.two(u).id, b.two(w).id), e.two(z).id));
}

TwoFunctorToCat TripleView::restrict(int e, Budget& budget) const {
  const Fin2Cat& x = extra();
  int ide = x.idOne(e);
  int ide2 = x.idTwo(ide);
  return make_square_diagram(
      t_->base, budget, [&](int a, int c) { return value(a, c, e); },
      [&](int f, int g) { return act(f, g, ide); },
      [&](int u, int w) { return act2(u, w, ide2); });
}

TwoFunctorToCat make_square_diagram(const TwoCatPtr& base, Budget& budget,
                                    const std::function<CatPtr(int, int)>& value,
                                    const std::function<Funct(int, int)>& action,
                                    const std::function<NatT(int, int)>& action2) {
  TwoFunctorToCat t;
  t.base = base;
  t.variance = Variance::OpFirst;
  t.shape = square_shape(base, budget);
  const Fin2Cat& s = *t.shape;
  const Fin2Cat& b = *base;
  t.onObjects.resize(s.numObjects());
  t.onOne.resize(s.numOne());
  t.onTwo.resize(s.numTwo());
  for (int a = 0; a < b.numObjects(); ++a)
    for (int c = 0; c < b.numObjects(); ++c)
      t.onObjects[s.objIndexChecked(pair_id(b.objectId(a), b.objectId(c)))] = value(a, c);
  for (int f = 0; f < b.numOne(); ++f)
    for (int g = 0; g < b.numOne(); ++g)
      t.onOne[s.oneIndexChecked(pair_id(b.one(f).id, b.one(g).id))] = action(f, g);
  for (int u = 0; u < b.numTwo(); ++u)
    for (int w = 0; w < b.numTwo(); ++w)
      t.onTwo[s.twoIndexChecked(pair_id(b.two(u).id, b.two(w).id))] = action2(u, w);
  return t;
}

TwoFunctorToCat make_triple_diagram(const TwoCatPtr& base, const TwoCatPtr& extra, Budget& budget,
                                    const std::function<CatPtr(int, int, int)>& value,
                                    const std::function<Funct(int, int, int)>& action,
                                    const std::function<NatT(int, int, int)>& action2) {
  TwoFunctorToCat t;
  t.base = base;
  t.extra = extra;
  t.variance = Variance::OpFirstExtra;
  t.shape = triple_shape(base, extra, budget);
  const Fin2Cat& s = *t.shape;
  const Fin2Cat& b = *base;
  const Fin2Cat& e = *extra;
  t.onObjects.resize(s.numObjects());
  t.onOne.resize(s.numOne());
  t.onTwo.resize(s.numTwo());
  for (int a = 0; a < b.numObjects(); ++a)
    for (int c = 0; c < b.numObjects(); ++c)
      for (int x = 0; x < e.numObjects(); ++x)
        t.onObjects[s.objIndexChecked(
            pair_id(pair_id(b.objectId(a), b.objectId(c)), e.objectId(x)))] = value(a, c, x);
  for (int f = 0; f < b.numOne(); ++f)
    for (int g = 0; g < b.numOne(); ++g)
      for (int h = 0; h < e.numOne(); ++h)
        t.onOne[s.oneIndexChecked(pair_id(pair_id(b.one(f).id, b.one(g).id), e.one(h).id))] =
            action(f, g, h);
  for (int u = 0; u < b.numTwo(); ++u)
    for (int w = 0; w < b.numTwo(); ++w)
      for (int z = 0; z < e.numTwo(); ++z)
        t.onTwo[s.twoIndexChecked(pair_id(pair_id(b.two(u).id, b.two(w).id), e.two(z).id))] =
            action2(u, w, z);
  return t;
}

TwoFunctorToCat constant_diagram(const TwoCatPtr& base, Variance v, const CatPtr& value,
                                 Budget& budget) {
  TwoFunctorToCat t;
  t.base = base;
  t.variance = v;
  switch (v) {
    case Variance::Covariant: t.shape = base; break;
    case Variance::OpFirst: t.shape = square_shape(base, budget); break;
    case Variance::OpFirstExtra:
      throw ContractError("constant_diagram: extra slot requires explicit shape; use precompose");
  }
  const Fin2Cat& s = *t.shape;
  Funct idF = identity_funct(value);
  NatT idT = identity_natt(idF);
  t.onObjects.assign(s.numObjects(), value);
  t.onOne.assign(s.numOne(), idF);
  t.onTwo.assign(s.numTwo(), idT);
  return t;
}

TwoFunctorToCat hom_2functor(const TwoCatPtr& a, Budget& budget) {
  const Fin2Cat& b = *a;
  std::vector<CatPtr> homs(static_cast<size_t>(b.numObjects()) * b.numObjects());
  for (int x = 0; x < b.numObjects(); ++x)
    for (int y = 0; y < b.numObjects(); ++y) {
      budget.charge(1, "hom_2functor values");
      homs[x * b.numObjects() + y] = b.localHom(x, y);
    }
  auto homAt = [&](int x, int y) { return homs[x * b.numObjects() + y]; };

  return make_square_diagram(
      a, budget, homAt,
      [&](int f, int g) {
        // hom(dst f, src g) -> hom(src f, dst g): h |-> g . h . f
        const OneCell& fc = b.one(f);
        const OneCell& gc = b.one(g);
        CatPtr dom = homAt(fc.dst, gc.src);
        CatPtr cod = homAt(fc.src, gc.dst);
        Funct r;
        r.dom = dom;
        r.cod = cod;
        r.objMap.resize(dom->numObjects());
        r.morMap.resize(dom->numMors());
        for (int o = 0; o < dom->numObjects(); ++o) {
          int h = b.oneIndexChecked(dom->objectId(o));
          r.objMap[o] = cod->objIndexChecked(b.one(b.composeOne(g, b.composeOne(h, f))).id);
        }
        for (int m = 0; m < dom->numMors(); ++m) {
          int u = b.twoIndexChecked(dom->mor(m).id);
          int img = b.hcomp(b.idTwo(g), b.hcomp(u, b.idTwo(f)));
          r.morMap[m] = cod->morIndexChecked(b.two(img).id);
        }
        return r;
      },
      [&](int u, int w) {
        // component at h : beta * 1_h * alpha
        const TwoCell& uc = b.two(u);
        const TwoCell& wc = b.two(w);
        const OneCell& f0 = b.one(uc.src);
        const OneCell& g0 = b.one(wc.src);
        CatPtr dom = homAt(f0.dst, g0.src);
        NatT r;
        // endpoints: actions of (src u, src w) and (dst u, dst w)
        Funct sa, da;
        {
          auto mk = [&](int f, int g) {
            const OneCell& fc = b.one(f);
            const OneCell& gc = b.one(g);
            CatPtr cod = homAt(fc.src, gc.dst);
            Funct rr;
            rr.dom = dom;
            rr.cod = cod;
            rr.objMap.resize(dom->numObjects());
            rr.morMap.resize(dom->numMors());
            for (int o = 0; o < dom->numObjects(); ++o) {
              int h = b.oneIndexChecked(dom->objectId(o));
              rr.objMap[o] = cod->objIndexChecked(b.one(b.composeOne(g, b.composeOne(h, f))).id);
            }
            for (int m = 0; m < dom->numMors(); ++m) {
              int z = b.twoIndexChecked(dom->mor(m).id);
              int img = b.hcomp(b.idTwo(g), b.hcomp(z, b.idTwo(f)));
              rr.morMap[m] = cod->morIndexChecked(b.two(img).id);
            }
            return rr;
          };
          sa = mk(uc.src, wc.src);
          da = mk(uc.dst, wc.dst);
        }
        r.src = sa;
        r.dst = da;
        r.comp.resize(dom->numObjects());
        for (int o = 0; o < dom->numObjects(); ++o) {
          int h = b.oneIndexChecked(dom->objectId(o));
          int cell = b.hcomp(w, b.hcomp(b.idTwo(h), u));
          r.comp[o] = sa.cod->morIndexChecked(b.two(cell).id);
        }
        return r;
      });
}

TwoFunctorToCat power_diagram(const TwoFunctorToCat& f, const TwoFunctorToCat& g, Budget& budget) {
  if (!(*f.shape == *g.shape)) throw ContractError("power_diagram: shapes differ");
  const TwoCatPtr base = f.shape;
  const Fin2Cat& b = *base;
  std::vector<FunctorCatResult> cells(static_cast<size_t>(b.numObjects()) * b.numObjects());
  for (int x = 0; x < b.numObjects(); ++x)
    for (int y = 0; y < b.numObjects(); ++y)
      cells[x * b.numObjects() + y] = functor_category(f.onObjects[x], g.onObjects[y], budget);
  auto cellAt = [&](int x, int y) -> const FunctorCatResult& {
    return cells[x * b.numObjects() + y];
  };

  return make_square_diagram(
      base, budget, [&](int x, int y) { return cellAt(x, y).cat; },
      [&](int u, int w) {
        const OneCell& uc = b.one(u);
        const OneCell& wc = b.one(w);
        return functor_cat_action(cellAt(uc.dst, wc.src), cellAt(uc.src, wc.dst), f.onOne[u],
                                  g.onOne[w]);
      },
      [&](int s, int z) {
        const TwoCell& sc = b.two(s);
        const TwoCell& zc = b.two(z);
        const OneCell& f0 = b.one(sc.src);
        const OneCell& g0 = b.one(zc.src);
        return functor_cat_action_2cell(cellAt(f0.dst, g0.src), cellAt(f0.src, g0.dst),
                                        f.onOne[sc.src], g.onOne[zc.src], f.onOne[sc.dst],
                                        g.onOne[zc.dst], f.onTwo[s], g.onTwo[z]);
      });
}

TwoFunctorToCat postcompose_power(const CatPtr& x, const TwoFunctorToCat& t, Budget& budget) {
  TwoFunctorToCat r;
  r.base = t.base;
  r.extra = t.extra;
  r.variance = t.variance;
  r.shape = t.shape;
  const Fin2Cat& s = *t.shape;
  std::vector<FunctorCatResult> cells(s.numObjects());
  for (int o = 0; o < s.numObjects(); ++o) cells[o] = functor_category(x, t.onObjects[o], budget);
  r.onObjects.resize(s.numObjects());
  for (int o = 0; o < s.numObjects(); ++o) r.onObjects[o] = cells[o].cat;
  Funct idX = identity_funct(x);
  r.onOne.resize(s.numOne());
  for (int f = 0; f < s.numOne(); ++f)
    r.onOne[f] = functor_cat_action(cells[s.one(f).src], cells[s.one(f).dst], idX, t.onOne[f]);
  r.onTwo.resize(s.numTwo());
  NatT idXT = identity_natt(idX);
  for (int u = 0; u < s.numTwo(); ++u) {
    const TwoCell& uc = s.two(u);
    const OneCell& f0 = s.one(uc.src);
    r.onTwo[u] = functor_cat_action_2cell(cells[f0.src], cells[f0.dst], idX, t.onOne[uc.src], idX,
                                          t.onOne[uc.dst], idXT, t.onTwo[u]);
  }
  return r;
}

TwoFunctorToCat precompose_diagram(const TwoFunctorToCat& t, const ShapeMap& m,
                                   const TwoCatPtr& newBase, const TwoCatPtr& newExtra,
                                   Variance v) {
  if (!(*m.cod == *t.shape)) throw ContractError("precompose_diagram: shape map codomain mismatch");
  TwoFunctorToCat r;
  r.base = newBase;
  r.extra = newExtra;
  r.variance = v;
  r.shape = m.dom;
  const Fin2Cat& s = *m.dom;
  r.onObjects.resize(s.numObjects());
  r.onOne.resize(s.numOne());
  r.onTwo.resize(s.numTwo());
  for (int o = 0; o < s.numObjects(); ++o) r.onObjects[o] = t.onObjects[m.objMap[o]];
  for (int f = 0; f < s.numOne(); ++f) r.onOne[f] = t.onOne[m.oneMap[f]];
  for (int u = 0; u < s.numTwo(); ++u) r.onTwo[u] = t.onTwo[m.twoMap[u]];
  return r;
}

TwoFunctorToCat reinterpret_as_square(const TwoFunctorToCat& t, const TwoCatPtr& b,
                                      Budget& budget) {
  TwoCatPtr expect = square_shape(b, budget);
  if (!(*t.shape == *expect))
    throw ContractError("reinterpret_as_square: shape is not op(base) x base");
  TwoFunctorToCat r = t;
  r.base = b;
  r.extra = nullptr;
  r.variance = Variance::OpFirst;
  r.shape = expect;
  return r;
}

TwoFunctorToCat swap_square_diagram(const TwoFunctorToCat& t, Budget& budget) {
  if (t.variance != Variance::OpFirst) throw ContractError("swap_square_diagram: not a square diagram");
  TwoCatPtr opBase = dualize_2cat(*t.base, DualMode::Op);
  SquareView v(t);
  // op keeps all ids, so base indices are reused directly.
  return make_square_diagram(
      opBase, budget, [&](int x, int y) { return v.value(y, x); },
      [&](int f, int g) { return v.act(g, f); },
      [&](int u, int w) { return v.act2(w, u); });
}

TwoFunctorToCat second_slot_diagram(const TwoFunctorToCat& g, Budget& budget) {
  if (g.variance != Variance::Covariant)
    throw ContractError("second_slot_diagram: input must be covariant");
  return make_square_diagram(
      g.base, budget, [&](int, int y) { return g.onObjects[y]; },
      [&](int, int h) { return g.onOne[h]; }, [&](int, int w) { return g.onTwo[w]; });
}

}  // namespace lendkit
