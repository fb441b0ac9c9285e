#include "lendkit/iso.hpp"

#include "lendkit/cat_ops.hpp"

#include <algorithm>
#include <map>

namespace lendkit {

namespace {

struct ObjProfile {
  int inDeg = 0, outDeg = 0, endo = 0;
  bool operator==(const ObjProfile& o) const = default;
};

std::vector<ObjProfile> profiles(const FinCat& c) {
  std::vector<ObjProfile> p(c.numObjects());
  for (int m = 0; m < c.numMors(); ++m) {
    const Mor& mm = c.mor(m);
    ++p[mm.src].outDeg;
    ++p[mm.dst].inDeg;
    if (mm.src == mm.dst) ++p[mm.src].endo;
  }
  return p;
}

// Extends an object bijection to morphisms hom-set by hom-set.
bool extend_to_morphisms(const FinCat& c, const FinCat& d, const std::vector<int32_t>& objMap,
                         std::vector<int32_t>& morMap, Budget& budget) {
  std::vector<int32_t> used(d.numMors(), 0);
  morMap.assign(c.numMors(), -1);
  for (int o = 0; o < c.numObjects(); ++o) {
    morMap[c.identity(o)] = d.identity(objMap[o]);
    used[d.identity(objMap[o])] = 1;
  }
  std::vector<int32_t> nonId;
  for (int m = 0; m < c.numMors(); ++m)
    if (!c.isIdentity(m)) nonId.push_back(m);

  auto consistent = [&](int m) {
    for (int other = 0; other < c.numMors(); ++other) {
      if (morMap[other] < 0) continue;
      int c1 = c.compose(m, other);
      if (c1 >= 0 && morMap[c1] >= 0 && d.compose(morMap[m], morMap[other]) != morMap[c1])
        return false;
      if (c1 >= 0 && morMap[c1] < 0 && d.compose(morMap[m], morMap[other]) < 0) return false;
      int c2 = c.compose(other, m);
      if (c2 >= 0 && morMap[c2] >= 0 && d.compose(morMap[other], morMap[m]) != morMap[c2])
        return false;
    }
    int mm = c.compose(m, m);
    if (mm >= 0 && morMap[mm] >= 0 && d.compose(morMap[m], morMap[m]) != morMap[mm]) return false;
    return true;
  };

  auto rec = [&](auto&& self, size_t k) -> bool {
    if (k == nonId.size()) return true;
    int m = nonId[k];
    const Mor& mm = c.mor(m);
    for (int32_t cand : d.hom(objMap[mm.src], objMap[mm.dst])) {
      if (used[cand]) continue;
      budget.charge(1, "iso morphism search");
      morMap[m] = cand;
      used[cand] = 1;
      if (consistent(m) && self(self, k + 1)) return true;
      morMap[m] = -1;
      used[cand] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

std::optional<IsoWitness> is_isomorphic(const CatPtr& c, const CatPtr& d, Budget& budget) {
  if (c->numObjects() != d->numObjects() || c->numMors() != d->numMors()) return std::nullopt;
  auto pc = profiles(*c);
  auto pd = profiles(*d);

  const int n = c->numObjects();
  std::vector<int32_t> objMap(n, -1);
  std::vector<int32_t> taken(n, 0);

  auto homSizesMatch = [&](int o) {
    for (int p = 0; p <= o; ++p) {
      if (objMap[p] < 0) continue;
      if (c->hom(o, p).size() != d->hom(objMap[o], objMap[p]).size()) return false;
      if (c->hom(p, o).size() != d->hom(objMap[p], objMap[o]).size()) return false;
    }
    return true;
  };

  std::vector<int32_t> morMap;
  auto rec = [&](auto&& self, int o) -> bool {
    if (o == n) return extend_to_morphisms(*c, *d, objMap, morMap, budget);
    for (int cand = 0; cand < n; ++cand) {
      if (taken[cand] || !(pc[o] == pd[cand])) continue;
      budget.charge(1, "iso object search");
      objMap[o] = cand;
      taken[cand] = 1;
      if (homSizesMatch(o) && self(self, o + 1)) return true;
      objMap[o] = -1;
      taken[cand] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  IsoWitness w;
  w.to.dom = c;
  w.to.cod = d;
  w.to.objMap = objMap;
  w.to.morMap = morMap;
  w.from.dom = d;
  w.from.cod = c;
  w.from.objMap.resize(n);
  w.from.morMap.resize(c->numMors());
  for (int o = 0; o < n; ++o) w.from.objMap[objMap[o]] = o;
  for (int m = 0; m < c->numMors(); ++m) w.from.morMap[morMap[m]] = m;
  return w;
}

SkeletonResult skeleton(const CatPtr& c, Budget& budget) {
  const int n = c->numObjects();
  std::vector<int32_t> repOf(n), isoToRep(n);
  for (int o = 0; o < n; ++o) {
    repOf[o] = o;
    isoToRep[o] = c->identity(o);
  }
  // Objects are listed in sorted id order, so scanning upward assigns each
  // class its least-id member.
  for (int o = 0; o < n; ++o) {
    if (repOf[o] != o) continue;
    for (int p = o + 1; p < n; ++p) {
      if (repOf[p] != p) continue;
      for (int32_t f : c->hom(p, o)) {
        budget.charge(1, "skeleton iso scan");
        int g = c->inverseOf(f);
        if (g >= 0) {
          repOf[p] = o;
          isoToRep[p] = f;
          break;
        }
      }
    }
  }
  std::vector<int32_t> reps;
  for (int o = 0; o < n; ++o)
    if (repOf[o] == o) reps.push_back(o);
  SubcatResult sub = full_subcategory(c, reps);

  SkeletonResult res;
  res.cat = sub.cat;
  res.inclusion = sub.inclusion;
  res.repOf = repOf;
  res.isoToRep = isoToRep;
  res.retraction.dom = c;
  res.retraction.cod = res.cat;
  res.retraction.objMap.resize(n);
  res.retraction.morMap.resize(c->numMors());
  for (int o = 0; o < n; ++o)
    res.retraction.objMap[o] = res.cat->objIndexChecked(c->objectId(repOf[o]));
  for (int m = 0; m < c->numMors(); ++m) {
    const Mor& mm = c->mor(m);
    // conjugate: u_dst . m . u_src^{-1}
    int inv = c->inverseOf(isoToRep[mm.src]);
    int conj = c->compose(c->compose(isoToRep[mm.dst], m), inv);
    res.retraction.morMap[m] = res.cat->morIndexChecked(c->mor(conj).id);
  }
  return res;
}

std::optional<EquivWitness> is_equivalent(const CatPtr& c, const CatPtr& d, Budget& budget) {
  SkeletonResult sc = skeleton(c, budget);
  SkeletonResult sd = skeleton(d, budget);
  auto iso = is_isomorphic(sc.cat, sd.cat, budget);
  if (!iso) return std::nullopt;

  EquivWitness w;
  w.to = compose_funct(sd.inclusion, compose_funct(iso->to, sc.retraction));
  w.from = compose_funct(sc.inclusion, compose_funct(iso->from, sd.retraction));

  // from(to(x)) is the c-representative of x's class transported through the
  // skeleton isomorphism and back; the chosen isos provide the unit.
  Funct idc = identity_funct(c);
  Funct idd = identity_funct(d);
  Funct roundC = compose_funct(w.from, w.to);
  w.unitIso.src = idc;
  w.unitIso.dst = roundC;
  w.unitIso.comp.resize(c->numObjects());
  for (int o = 0; o < c->numObjects(); ++o) {
    // to(x) lands on the d-side image of rep(x); from maps it back to rep(x).
    w.unitIso.comp[o] = sc.isoToRep[o];
  }
  Funct roundD = compose_funct(w.to, w.from);
  w.counitIso.src = roundD;
  w.counitIso.dst = idd;
  w.counitIso.comp.resize(d->numObjects());
  for (int o = 0; o < d->numObjects(); ++o) {
    int inv = d->inverseOf(sd.isoToRep[o]);
    w.counitIso.comp[o] = inv;
  }
  return w;
}

}  // namespace lendkit
