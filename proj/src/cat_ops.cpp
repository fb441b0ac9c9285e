#include "lendkit/cat_ops.hpp"

#include <algorithm>

namespace lendkit {

namespace {

// Mixed-radix odometer over factor cell counts; applies fn to each tuple.
template <typename Fn>
void for_each_tuple(const std::vector<int>& radix, Fn&& fn) {
  for (int r : radix)
    if (r == 0) return;
  std::vector<int32_t> idx(radix.size(), 0);
  while (true) {
    fn(idx);
    size_t k = radix.size();
    while (k > 0) {
      --k;
      if (++idx[k] < radix[k]) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (radix.empty()) return;
  }
}

std::string tuple_of(const std::vector<CatPtr>& factors, const std::vector<int32_t>& idx,
                     bool mors) {
  std::vector<std::string> parts(factors.size());
  for (size_t i = 0; i < factors.size(); ++i)
    parts[i] = mors ? factors[i]->mor(idx[i]).id : factors[i]->objectId(idx[i]);
  return tuple_id(parts);
}

}  // namespace

int ProductResult::objOf(const std::vector<int32_t>& parts) const {
  std::vector<std::string> ids(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) ids[i] = projections[i].cod->objectId(parts[i]);
  return cat->objIndexChecked(tuple_id(ids));
}

int ProductResult::morOf(const std::vector<int32_t>& parts) const {
  std::vector<std::string> ids(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) ids[i] = projections[i].cod->mor(parts[i]).id;
  return cat->morIndexChecked(tuple_id(ids));
}

ProductResult product_cat_indexed(const std::vector<CatPtr>& factors, Budget& budget) {
  const size_t k = factors.size();
  std::vector<int> objRadix(k), morRadix(k);
  long long numObj = 1, numMor = 1;
  for (size_t i = 0; i < k; ++i) {
    objRadix[i] = factors[i]->numObjects();
    morRadix[i] = factors[i]->numMors();
    numObj *= objRadix[i];
    numMor *= morRadix[i];
    if (numObj > budget.limit() || numMor > budget.limit())
      throw BudgetExceeded("product category too large");
  }
  budget.charge(numObj + numMor, "product cells");

  FinCatBuilder b;
  std::vector<std::vector<int32_t>> objComps, morComps;
  objComps.reserve(static_cast<size_t>(numObj));
  morComps.reserve(static_cast<size_t>(numMor));
  for_each_tuple(objRadix, [&](const std::vector<int32_t>& idx) {
    b.addObject(tuple_of(factors, idx, false));
    objComps.push_back(idx);
  });
  for_each_tuple(morRadix, [&](const std::vector<int32_t>& idx) {
    std::vector<std::string> srcs(k), dsts(k);
    for (size_t i = 0; i < k; ++i) {
      const Mor& m = factors[i]->mor(idx[i]);
      srcs[i] = factors[i]->objectId(m.src);
      dsts[i] = factors[i]->objectId(m.dst);
    }
    b.addMor(tuple_of(factors, idx, true), tuple_id(srcs), tuple_id(dsts));
    morComps.push_back(idx);
  });

  // Composable pairs factor componentwise; count them to size the table.
  std::vector<std::vector<std::pair<int32_t, int32_t>>> pairs(k);
  long long numPairs = numMor > 0 ? 1 : 0;
  for (size_t i = 0; i < k; ++i) {
    for (int g = 0; g < morRadix[i]; ++g)
      for (int f = 0; f < morRadix[i]; ++f)
        if (factors[i]->mor(f).dst == factors[i]->mor(g).src) pairs[i].emplace_back(g, f);
    numPairs *= static_cast<long long>(pairs[i].size());
    if (numPairs > 4 * budget.limit()) throw BudgetExceeded("product composition table too large");
  }
  budget.charge(numPairs, "product composition");

  const FinCat& pc = b.prepare(numPairs);

  // Mixed-radix position -> final (sorted) index.
  std::vector<int32_t> objFinal(objComps.size()), morFinal(morComps.size());
  for (size_t i = 0; i < objComps.size(); ++i)
    objFinal[i] = pc.objIndexChecked(tuple_of(factors, objComps[i], false));
  for (size_t i = 0; i < morComps.size(); ++i)
    morFinal[i] = pc.morIndexChecked(tuple_of(factors, morComps[i], true));

  auto morPos = [&](const std::vector<int32_t>& idx) {
    long long p = 0;
    for (size_t i = 0; i < k; ++i) p = p * morRadix[i] + idx[i];
    return p;
  };

  for_each_tuple(objRadix, [&](const std::vector<int32_t>& idx) {
    std::vector<int32_t> ids(k);
    long long opos = 0, mpos = 0;
    for (size_t i = 0; i < k; ++i) {
      ids[i] = factors[i]->identity(idx[i]);
      opos = opos * objRadix[i] + idx[i];
      mpos = mpos * morRadix[i] + ids[i];
    }
    b.setIdentityByIndex(objFinal[opos], morFinal[mpos]);
  });

  std::vector<int> pairRadix(k);
  for (size_t i = 0; i < k; ++i) pairRadix[i] = static_cast<int>(pairs[i].size());
  std::vector<int32_t> gIdx(k), fIdx(k), gfIdx(k);
  for_each_tuple(pairRadix, [&](const std::vector<int32_t>& idx) {
    for (size_t i = 0; i < k; ++i) {
      auto [g, f] = pairs[i][idx[i]];
      gIdx[i] = g;
      fIdx[i] = f;
      gfIdx[i] = factors[i]->compose(g, f);
    }
    b.setComposeByIndex(morFinal[morPos(gIdx)], morFinal[morPos(fIdx)], morFinal[morPos(gfIdx)]);
  });

  ProductResult res;
  res.cat = b.buildShared();
  res.objComponents.resize(objComps.size());
  res.morComponents.resize(morComps.size());
  long long opos = 0;
  for (const auto& oc : objComps) res.objComponents[objFinal[opos++]] = oc;
  long long mpos = 0;
  for (const auto& mc : morComps) res.morComponents[morFinal[mpos++]] = mc;

  for (size_t i = 0; i < k; ++i) {
    Funct p;
    p.dom = res.cat;
    p.cod = factors[i];
    p.objMap.resize(res.cat->numObjects());
    p.morMap.resize(res.cat->numMors());
    for (int o = 0; o < res.cat->numObjects(); ++o) p.objMap[o] = res.objComponents[o][i];
    for (int m = 0; m < res.cat->numMors(); ++m) p.morMap[m] = res.morComponents[m][i];
    res.projections.push_back(std::move(p));
  }
  return res;
}

ProductResult product_cat(const CatPtr& c, const CatPtr& d, Budget& budget) {
  return product_cat_indexed({c, d}, budget);
}

Funct pair_into_product(const ProductResult& prod, const std::vector<Funct>& legs) {
  if (legs.size() != prod.projections.size())
    throw ContractError("pair_into_product: leg count mismatch");
  Funct r;
  r.dom = legs.empty() ? nullptr : legs[0].dom;
  r.cod = prod.cat;
  const int no = r.dom ? r.dom->numObjects() : 0;
  const int nm = r.dom ? r.dom->numMors() : 0;
  r.objMap.resize(no);
  r.morMap.resize(nm);
  std::vector<int32_t> parts(legs.size());
  for (int o = 0; o < no; ++o) {
    for (size_t i = 0; i < legs.size(); ++i) parts[i] = legs[i].objMap[o];
    r.objMap[o] = prod.objOf(parts);
  }
  for (int m = 0; m < nm; ++m) {
    for (size_t i = 0; i < legs.size(); ++i) parts[i] = legs[i].morMap[m];
    r.morMap[m] = prod.morOf(parts);
  }
  return r;
}

CatPtr terminal_cat() {
  static CatPtr one = [] {
    FinCatBuilder b;
    b.addObject("*");
    b.addMor("id*", "*", "*");
    b.setIdentity("*", "id*");
    b.setCompose("id*", "id*", "id*");
    return b.buildShared();
  }();
  return one;
}

CatPtr empty_cat() {
  static CatPtr none = [] {
    FinCatBuilder b;
    return b.buildShared();
  }();
  return none;
}

CatPtr opposite_cat(const CatPtr& c) {
  FinCatBuilder b;
  for (const auto& o : c->objects()) b.addObject(o);
  for (const auto& m : c->mors()) b.addMor(m.id, c->objectId(m.dst), c->objectId(m.src));
  const FinCat& oc = b.prepare(0);
  // Ids are unchanged, so indices agree with the original category.
  (void)oc;
  for (int o = 0; o < c->numObjects(); ++o) b.setIdentityByIndex(o, c->identity(o));
  for (int g = 0; g < c->numMors(); ++g)
    for (int f = 0; f < c->numMors(); ++f) {
      int gf = c->compose(f, g);
      if (gf >= 0) b.setComposeByIndex(g, f, gf);
    }
  return b.buildShared();
}

SliceResult slice_over(const CatPtr& b, const std::string& objId, Budget& budget) {
  int tgt = b->objIndexChecked(objId);
  FinCatBuilder bd;
  std::vector<int32_t> sliceObjs;
  for (int m = 0; m < b->numMors(); ++m) {
    if (b->mor(m).dst == tgt) {
      bd.addObject(b->mor(m).id);
      sliceObjs.push_back(m);
    }
  }
  // Morphisms f -> g are h with g.h = f.
  struct Tri {
    int32_t f, g, h;
  };
  std::vector<Tri> tris;
  for (int32_t f : sliceObjs) {
    for (int32_t g : sliceObjs) {
      for (int32_t h : b->hom(b->mor(f).src, b->mor(g).src)) {
        budget.charge(1, "slice triangles");
        if (b->compose(g, h) == f) {
          bd.addMor(arrow_id(b->mor(f).id, b->mor(g).id, b->mor(h).id), b->mor(f).id, b->mor(g).id);
          tris.push_back({f, g, h});
        }
      }
    }
  }
  const FinCat& sc = bd.prepare(0);
  auto triId = [&](const Tri& t) {
    return arrow_id(b->mor(t.f).id, b->mor(t.g).id, b->mor(t.h).id);
  };
  for (size_t i = 0; i < sliceObjs.size(); ++i) {
    int o = sc.objIndexChecked(b->mor(sliceObjs[i]).id);
    Tri idt{sliceObjs[i], sliceObjs[i], b->identity(b->mor(sliceObjs[i]).src)};
    bd.setIdentityByIndex(o, sc.morIndexChecked(triId(idt)));
  }
  for (const Tri& s : tris) {
    for (const Tri& t : tris) {
      if (t.g != s.f) continue;  // compose s after t: t : f->g, s : g->e
      Tri c{t.f, s.g, b->compose(s.h, t.h)};
      bd.setComposeByIndex(sc.morIndexChecked(triId(s)), sc.morIndexChecked(triId(t)),
                           sc.morIndexChecked(triId(c)));
    }
  }
  SliceResult res;
  res.cat = bd.buildShared();
  res.objUnderlying.resize(res.cat->numObjects());
  res.morUnderlying.resize(res.cat->numMors());
  for (int32_t f : sliceObjs) res.objUnderlying[res.cat->objIndexChecked(b->mor(f).id)] = f;
  for (const Tri& t : tris) res.morUnderlying[res.cat->morIndexChecked(triId(t))] = t.h;
  res.projection.dom = res.cat;
  res.projection.cod = b;
  res.projection.objMap.resize(res.cat->numObjects());
  res.projection.morMap = res.morUnderlying;
  for (int o = 0; o < res.cat->numObjects(); ++o)
    res.projection.objMap[o] = b->mor(res.objUnderlying[o]).src;
  return res;
}

SubcatResult full_subcategory(const CatPtr& c, const std::vector<int32_t>& objs) {
  std::vector<char> keep(c->numObjects(), 0);
  for (int32_t o : objs) keep[o] = 1;
  FinCatBuilder b;
  for (int o = 0; o < c->numObjects(); ++o)
    if (keep[o]) b.addObject(c->objectId(o));
  std::vector<int32_t> mors;
  for (int m = 0; m < c->numMors(); ++m) {
    if (keep[c->mor(m).src] && keep[c->mor(m).dst]) {
      b.addMor(c->mor(m).id, c->objectId(c->mor(m).src), c->objectId(c->mor(m).dst));
      mors.push_back(m);
    }
  }
  const FinCat& sc = b.prepare(0);
  for (int o = 0; o < c->numObjects(); ++o)
    if (keep[o])
      b.setIdentityByIndex(sc.objIndexChecked(c->objectId(o)),
                           sc.morIndexChecked(c->mor(c->identity(o)).id));
  for (int32_t g : mors)
    for (int32_t f : mors) {
      int gf = c->compose(g, f);
      if (gf >= 0)
        b.setComposeByIndex(sc.morIndexChecked(c->mor(g).id), sc.morIndexChecked(c->mor(f).id),
                            sc.morIndexChecked(c->mor(gf).id));
    }
  SubcatResult res;
  res.cat = b.buildShared();
  res.inclusion.dom = res.cat;
  res.inclusion.cod = c;
  res.inclusion.objMap.resize(res.cat->numObjects());
  res.inclusion.morMap.resize(res.cat->numMors());
  for (int o = 0; o < res.cat->numObjects(); ++o)
    res.inclusion.objMap[o] = c->objIndexChecked(res.cat->objectId(o));
  for (int m = 0; m < res.cat->numMors(); ++m)
    res.inclusion.morMap[m] = c->morIndexChecked(res.cat->mor(m).id);
  return res;
}

InserterResult inserter(const Funct& f, const Funct& g, Budget& budget) {
  if (!same_category(f.dom, g.dom) || !same_category(f.cod, g.cod))
    throw ContractError("inserter: functors not parallel");
  const FinCat& a = *f.dom;
  const FinCat& b = *f.cod;

  FinCatBuilder bd;
  std::vector<std::pair<int32_t, int32_t>> objs;  // (A, phi : fA -> gA)
  for (int o = 0; o < a.numObjects(); ++o) {
    for (int32_t phi : b.hom(f.objMap[o], g.objMap[o])) {
      budget.charge(1, "inserter objects");
      bd.addObject(pair_id(a.objectId(o), b.mor(phi).id));
      objs.emplace_back(o, phi);
    }
  }
  struct Edge {
    int32_t srcIdx, dstIdx, h;
  };
  std::vector<Edge> edges;
  auto objId = [&](size_t i) {
    return pair_id(a.objectId(objs[i].first), b.mor(objs[i].second).id);
  };
  for (size_t i = 0; i < objs.size(); ++i) {
    for (size_t j = 0; j < objs.size(); ++j) {
      for (int32_t h : a.hom(objs[i].first, objs[j].first)) {
        budget.charge(1, "inserter morphisms");
        // g(h) . phi_i = phi_j . f(h)
        if (b.compose(g.morMap[h], objs[i].second) == b.compose(objs[j].second, f.morMap[h])) {
          bd.addMor(arrow_id(objId(i), objId(j), a.mor(h).id), objId(i), objId(j));
          edges.push_back({static_cast<int32_t>(i), static_cast<int32_t>(j), h});
        }
      }
    }
  }
  const FinCat& ic = bd.prepare(0);
  auto edgeId = [&](const Edge& e) { return arrow_id(objId(e.srcIdx), objId(e.dstIdx), a.mor(e.h).id); };
  for (size_t i = 0; i < objs.size(); ++i) {
    Edge idE{static_cast<int32_t>(i), static_cast<int32_t>(i), a.identity(objs[i].first)};
    bd.setIdentityByIndex(ic.objIndexChecked(objId(i)), ic.morIndexChecked(edgeId(idE)));
  }
  for (const Edge& s : edges) {
    for (const Edge& t : edges) {
      if (t.dstIdx != s.srcIdx) continue;
      Edge c{t.srcIdx, s.dstIdx, a.compose(s.h, t.h)};
      bd.setComposeByIndex(ic.morIndexChecked(edgeId(s)), ic.morIndexChecked(edgeId(t)),
                           ic.morIndexChecked(edgeId(c)));
    }
  }
  InserterResult res;
  res.cat = bd.buildShared();
  res.objData.resize(objs.size());
  res.morUnderlying.resize(res.cat->numMors());
  for (size_t i = 0; i < objs.size(); ++i) res.objData[res.cat->objIndexChecked(objId(i))] = objs[i];
  for (const Edge& e : edges) res.morUnderlying[res.cat->morIndexChecked(edgeId(e))] = e.h;
  res.projection.dom = res.cat;
  res.projection.cod = f.dom;
  res.projection.objMap.resize(res.cat->numObjects());
  res.projection.morMap = res.morUnderlying;
  for (int o = 0; o < res.cat->numObjects(); ++o) res.projection.objMap[o] = res.objData[o].first;
  res.inserted.src = compose_funct(f, res.projection);
  res.inserted.dst = compose_funct(g, res.projection);
  res.inserted.comp.resize(res.cat->numObjects());
  for (int o = 0; o < res.cat->numObjects(); ++o) res.inserted.comp[o] = res.objData[o].second;
  return res;
}

SubcatResult equifier(const NatT& alpha, const NatT& beta) {
  if (!(alpha.src == beta.src) || !(alpha.dst == beta.dst))
    throw ContractError("equifier: transformations not parallel");
  std::vector<int32_t> objs;
  for (size_t o = 0; o < alpha.comp.size(); ++o)
    if (alpha.comp[o] == beta.comp[o]) objs.push_back(static_cast<int32_t>(o));
  return full_subcategory(alpha.src.dom, objs);
}

std::optional<BinaryProductWitness> check_binary_product(const FinCat& c, int x, int y) {
  for (int p = 0; p < c.numObjects(); ++p) {
    for (int32_t p1 : c.hom(p, x)) {
      for (int32_t p2 : c.hom(p, y)) {
        bool universal = true;
        for (int z = 0; z < c.numObjects() && universal; ++z) {
          for (int32_t f : c.hom(z, x)) {
            for (int32_t g : c.hom(z, y)) {
              int count = 0;
              for (int32_t h : c.hom(z, p)) {
                if (c.compose(p1, h) == f && c.compose(p2, h) == g) ++count;
              }
              if (count != 1) {
                universal = false;
                break;
              }
            }
            if (!universal) break;
          }
        }
        if (universal) return BinaryProductWitness{p, p1, p2};
      }
    }
  }
  return std::nullopt;
}

}  // namespace lendkit
