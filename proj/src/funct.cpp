#include "lendkit/funct.hpp"

namespace lendkit {

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool Funct::operator==(const Funct& o) const {
  return objMap == o.objMap && morMap == o.morMap && same_category(dom, o.dom) &&
         same_category(cod, o.cod);
}

std::string Funct::canonicalId() const {
  std::vector<std::string> parts;
  parts.reserve(morMap.size());
  for (size_t m = 0; m < morMap.size(); ++m) parts.push_back(cod->mor(morMap[m]).id);
  return bracket_id(parts);
}

Funct identity_funct(CatPtr c) {
  Funct f;
  f.dom = c;
  f.cod = std::move(c);
  f.objMap.resize(f.dom->numObjects());
  f.morMap.resize(f.dom->numMors());
  for (int o = 0; o < f.dom->numObjects(); ++o) f.objMap[o] = o;
  for (int m = 0; m < f.dom->numMors(); ++m) f.morMap[m] = m;
  return f;
}

Funct compose_funct(const Funct& g, const Funct& f) {
  if (!same_category(f.cod, g.dom)) throw ContractError("compose_funct: middle categories differ");
  Funct r;
  r.dom = f.dom;
  r.cod = g.cod;
  r.objMap.resize(f.objMap.size());
  r.morMap.resize(f.morMap.size());
  for (size_t o = 0; o < f.objMap.size(); ++o) r.objMap[o] = g.objMap[f.objMap[o]];
  for (size_t m = 0; m < f.morMap.size(); ++m) r.morMap[m] = g.morMap[f.morMap[m]];
  return r;
}

ValidationReport validate_funct(const Funct& f) {
  ValidationReport rep;
  const FinCat& a = *f.dom;
  const FinCat& b = *f.cod;
  if (static_cast<int>(f.objMap.size()) != a.numObjects() ||
      static_cast<int>(f.morMap.size()) != a.numMors()) {
    rep.add("functor: map sizes do not match the domain");
    return rep;
  }
  for (int m = 0; m < a.numMors(); ++m) {
    const Mor& src = a.mor(m);
    const Mor& img = b.mor(f.morMap[m]);
    if (img.src != f.objMap[src.src] || img.dst != f.objMap[src.dst])
      rep.add("functor: image of " + src.id + " has wrong endpoints");
  }
  for (int o = 0; o < a.numObjects(); ++o) {
    if (f.morMap[a.identity(o)] != b.identity(f.objMap[o]))
      rep.add("functor: identity of " + a.objectId(o) + " not preserved");
  }
  for (int g = 0; g < a.numMors(); ++g) {
    for (int m = 0; m < a.numMors(); ++m) {
      int gm = a.compose(g, m);
      if (gm < 0) continue;
      if (b.compose(f.morMap[g], f.morMap[m]) != f.morMap[gm])
        rep.add("functor: composition of (" + a.mor(g).id + "," + a.mor(m).id + ") not preserved");
    }
  }
  return rep;
}

bool is_funct(const Funct& f) { return validate_funct(f).ok(); }

bool NatT::operator==(const NatT& o) const { return comp == o.comp && src == o.src && dst == o.dst; }

bool NatT::isIdentityOn(const Funct& f) const {
  if (!(src == f) || !(dst == f)) return false;
  for (size_t o = 0; o < comp.size(); ++o)
    if (comp[o] != f.cod->identity(f.objMap[o])) return false;
  return true;
}

std::string NatT::canonicalId() const {
  std::vector<std::string> parts;
  parts.reserve(comp.size());
  for (size_t o = 0; o < comp.size(); ++o) parts.push_back(src.cod->mor(comp[o]).id);
  return nt_id(parts, src.canonicalId(), dst.canonicalId());
}

NatT identity_natt(const Funct& f) {
  NatT t;
  t.src = f;
  t.dst = f;
  t.comp.resize(f.objMap.size());
  for (size_t o = 0; o < f.objMap.size(); ++o) t.comp[o] = f.cod->identity(f.objMap[o]);
  return t;
}

NatT vcomp(const NatT& beta, const NatT& alpha) {
  if (!(beta.src == alpha.dst)) throw ContractError("vcomp: transformations not composable");
  NatT r;
  r.src = alpha.src;
  r.dst = beta.dst;
  r.comp.resize(alpha.comp.size());
  const FinCat& b = *alpha.src.cod;
  for (size_t o = 0; o < alpha.comp.size(); ++o) {
    int m = b.compose(beta.comp[o], alpha.comp[o]);
    if (m < 0) throw ContractError("vcomp: components not composable");
    r.comp[o] = m;
  }
  return r;
}

NatT whisker_left(const Funct& h, const NatT& alpha) {
  NatT r;
  r.src = compose_funct(h, alpha.src);
  r.dst = compose_funct(h, alpha.dst);
  r.comp.resize(alpha.comp.size());
  for (size_t o = 0; o < alpha.comp.size(); ++o) r.comp[o] = h.morMap[alpha.comp[o]];
  return r;
}

NatT whisker_right(const NatT& alpha, const Funct& k) {
  NatT r;
  r.src = compose_funct(alpha.src, k);
  r.dst = compose_funct(alpha.dst, k);
  r.comp.resize(k.objMap.size());
  for (size_t o = 0; o < k.objMap.size(); ++o) r.comp[o] = alpha.comp[k.objMap[o]];
  return r;
}

NatT hcomp_natt(const NatT& beta, const NatT& alpha) {
  // beta : H => H' over (B -> C), alpha : F => F' over (A -> B).
  return vcomp(whisker_right(beta, alpha.dst), whisker_left(beta.src, alpha));
}

ValidationReport validate_natt(const NatT& t) {
  ValidationReport rep;
  if (!same_category(t.src.dom, t.dst.dom) || !same_category(t.src.cod, t.dst.cod)) {
    rep.add("natural transformation: source/target functors not parallel");
    return rep;
  }
  const FinCat& a = *t.src.dom;
  const FinCat& b = *t.src.cod;
  if (static_cast<int>(t.comp.size()) != a.numObjects()) {
    rep.add("natural transformation: component count mismatch");
    return rep;
  }
  for (int o = 0; o < a.numObjects(); ++o) {
    const Mor& c = b.mor(t.comp[o]);
    if (c.src != t.src.objMap[o] || c.dst != t.dst.objMap[o])
      rep.add("natural transformation: component at " + a.objectId(o) + " has wrong endpoints");
  }
  if (!rep.ok()) return rep;
  for (int m = 0; m < a.numMors(); ++m) {
    const Mor& f = a.mor(m);
    int lhs = b.compose(t.dst.morMap[m], t.comp[f.src]);
    int rhs = b.compose(t.comp[f.dst], t.src.morMap[m]);
    if (lhs != rhs || lhs < 0)
      rep.add("naturality fails at morphism " + f.id);
  }
  return rep;
}

bool is_natt(const NatT& t) { return validate_natt(t).ok(); }

bool natt_invertible(const NatT& t) {
  const FinCat& b = *t.src.cod;
  for (size_t o = 0; o < t.comp.size(); ++o)
    if (!b.isInvertible(t.comp[o])) return false;
  return true;
}

}  // namespace lendkit
