#include "lendkit/twocat.hpp"

#include <algorithm>

#include "lendkit/cat_ops.hpp"

namespace lendkit {

namespace {
int64_t key(int a, int b) { return (static_cast<int64_t>(a) << 32) | static_cast<uint32_t>(b); }
const std::vector<int32_t> kEmpty;
}  // namespace

int Fin2Cat::objIndex(const std::string& id) const {
  auto it = objIdx_.find(id);
  return it == objIdx_.end() ? -1 : it->second;
}
int Fin2Cat::oneIndex(const std::string& id) const {
  auto it = oneIdx_.find(id);
  return it == oneIdx_.end() ? -1 : it->second;
}
int Fin2Cat::twoIndex(const std::string& id) const {
  auto it = twoIdx_.find(id);
  return it == twoIdx_.end() ? -1 : it->second;
}
int Fin2Cat::objIndexChecked(const std::string& id) const {
  int i = objIndex(id);
  if (i < 0) throw InputError("unknown 2-category object: " + id);
  return i;
}
int Fin2Cat::oneIndexChecked(const std::string& id) const {
  int i = oneIndex(id);
  if (i < 0) throw InputError("unknown 1-cell: " + id);
  return i;
}
int Fin2Cat::twoIndexChecked(const std::string& id) const {
  int i = twoIndex(id);
  if (i < 0) throw InputError("unknown 2-cell: " + id);
  return i;
}

const std::vector<int32_t>& Fin2Cat::oneHom(int a, int b) const {
  auto it = oneHom_.find(key(a, b));
  return it == oneHom_.end() ? kEmpty : it->second;
}
const std::vector<int32_t>& Fin2Cat::twoHom(int f, int g) const {
  auto it = twoHom_.find(key(f, g));
  return it == twoHom_.end() ? kEmpty : it->second;
}
const std::vector<int32_t>& Fin2Cat::twoCellsAt(int a, int b) const {
  auto it = twoAt_.find(key(a, b));
  return it == twoAt_.end() ? kEmpty : it->second;
}

CatPtr Fin2Cat::localHom(int a, int b) const {
  FinCatBuilder bd;
  for (int32_t f : oneHom(a, b)) bd.addObject(one_[f].id);
  for (int32_t t : twoCellsAt(a, b))
    bd.addMor(two_[t].id, one_[two_[t].src].id, one_[two_[t].dst].id);
  const FinCat& hc = bd.prepare(0);
  for (int32_t f : oneHom(a, b))
    bd.setIdentityByIndex(hc.objIndexChecked(one_[f].id), hc.morIndexChecked(two_[idTwo_[f]].id));
  for (int32_t t : twoCellsAt(a, b))
    for (int32_t s : twoCellsAt(a, b)) {
      if (two_[s].dst != two_[t].src) continue;
      int st = vc_.get(t, s);
      if (st >= 0)
        bd.setComposeByIndex(hc.morIndexChecked(two_[t].id), hc.morIndexChecked(two_[s].id),
                             hc.morIndexChecked(two_[st].id));
    }
  return bd.buildShared();
}

bool Fin2Cat::locallyDiscrete() const { return numTwo() == numOne(); }

bool Fin2Cat::operator==(const Fin2Cat& o) const {
  if (objects_ != o.objects_ || one_.size() != o.one_.size() || two_.size() != o.two_.size())
    return false;
  for (size_t i = 0; i < one_.size(); ++i)
    if (one_[i].id != o.one_[i].id || one_[i].src != o.one_[i].src || one_[i].dst != o.one_[i].dst)
      return false;
  for (size_t i = 0; i < two_.size(); ++i)
    if (two_[i].id != o.two_[i].id || two_[i].src != o.two_[i].src || two_[i].dst != o.two_[i].dst)
      return false;
  return idOne_ == o.idOne_ && idTwo_ == o.idTwo_ && c1_ == o.c1_ && vc_ == o.vc_ && hc_ == o.hc_;
}

void Fin2CatBuilder::addObject(std::string id) { objects_.push_back(std::move(id)); }
void Fin2CatBuilder::addOne(std::string id, std::string src, std::string dst) {
  one_.push_back({std::move(id), std::move(src), std::move(dst)});
}
void Fin2CatBuilder::addTwo(std::string id, std::string src, std::string dst) {
  two_.push_back({std::move(id), std::move(src), std::move(dst)});
}
void Fin2CatBuilder::setIdOne(const std::string& obj, const std::string& cell) {
  idOnes_.emplace_back(obj, cell);
}
void Fin2CatBuilder::setIdTwo(const std::string& cell, const std::string& t) {
  idTwos_.emplace_back(cell, t);
}
void Fin2CatBuilder::setComposeOne(const std::string& g, const std::string& f,
                                   const std::string& gf) {
  c1s_.push_back({g, f, gf});
}
void Fin2CatBuilder::setVcomp(const std::string& b, const std::string& a, const std::string& ba) {
  vcs_.push_back({b, a, ba});
}
void Fin2CatBuilder::setHcomp(const std::string& b, const std::string& a, const std::string& ba) {
  hcs_.push_back({b, a, ba});
}

const Fin2Cat& Fin2CatBuilder::prepare(long long oneHint, long long vHint, long long hHint) {
  Fin2Cat& c = pending_;
  c.objects_ = objects_;
  std::sort(c.objects_.begin(), c.objects_.end());
  for (size_t i = 0; i + 1 < c.objects_.size(); ++i)
    if (c.objects_[i] == c.objects_[i + 1])
      throw InputError("duplicate 2-category object: " + c.objects_[i]);
  for (size_t i = 0; i < c.objects_.size(); ++i) c.objIdx_[c.objects_[i]] = static_cast<int32_t>(i);

  auto sortCells = [](std::vector<RawCell>& v) {
    std::sort(v.begin(), v.end(), [](const RawCell& a, const RawCell& b) { return a.id < b.id; });
  };
  sortCells(one_);
  for (auto& rc : one_) {
    if (c.oneIdx_.count(rc.id)) throw InputError("duplicate 1-cell id: " + rc.id);
    int s = c.objIndex(rc.src), d = c.objIndex(rc.dst);
    if (s < 0 || d < 0) throw InputError("1-cell " + rc.id + " has unknown endpoint");
    c.oneIdx_[rc.id] = static_cast<int32_t>(c.one_.size());
    c.one_.push_back({rc.id, s, d});
  }
  sortCells(two_);
  for (auto& rc : two_) {
    if (c.twoIdx_.count(rc.id)) throw InputError("duplicate 2-cell id: " + rc.id);
    int s = c.oneIndex(rc.src), d = c.oneIndex(rc.dst);
    if (s < 0 || d < 0) throw InputError("2-cell " + rc.id + " has unknown endpoint 1-cell");
    c.twoIdx_[rc.id] = static_cast<int32_t>(c.two_.size());
    c.two_.push_back({rc.id, s, d});
  }
  c.idOne_.assign(c.objects_.size(), -1);
  c.idTwo_.assign(c.one_.size(), -1);
  c.c1_ = ComposeTable(c.numOne(), oneHint);
  c.vc_ = ComposeTable(c.numTwo(), vHint);
  c.hc_ = ComposeTable(c.numTwo(), hHint);
  prepared_ = true;
  return c;
}

Fin2Cat Fin2CatBuilder::build() {
  if (!prepared_) prepare();
  Fin2Cat& c = pending_;
  for (const auto& [obj, cell] : idOnes_) {
    int o = c.objIndex(obj), f = c.oneIndex(cell);
    if (o < 0 || f < 0) throw InputError("idOne entry references unknown cell");
    c.idOne_[o] = f;
  }
  for (const auto& [cell, t] : idTwos_) {
    int f = c.oneIndex(cell), u = c.twoIndex(t);
    if (f < 0 || u < 0) throw InputError("idTwo entry references unknown cell");
    c.idTwo_[f] = u;
  }
  for (size_t o = 0; o < c.objects_.size(); ++o)
    if (c.idOne_[o] < 0) throw InputError("missing identity 1-cell for object " + c.objects_[o]);
  for (size_t f = 0; f < c.one_.size(); ++f)
    if (c.idTwo_[f] < 0) throw InputError("missing identity 2-cell for 1-cell " + c.one_[f].id);

  auto fill = [&](const std::vector<std::array<std::string, 3>>& entries, ComposeTable& table,
                  bool twoLevel, const char* what) {
    for (const auto& e : entries) {
      int g = twoLevel ? c.twoIndex(e[0]) : c.oneIndex(e[0]);
      int f = twoLevel ? c.twoIndex(e[1]) : c.oneIndex(e[1]);
      int gf = twoLevel ? c.twoIndex(e[2]) : c.oneIndex(e[2]);
      if (g < 0 || f < 0 || gf < 0)
        throw InputError(std::string(what) + " entry references unknown cell: [" + e[0] + "," +
                         e[1] + "," + e[2] + "]");
      table.set(g, f, gf);
    }
  };
  fill(c1s_, c.c1_, false, "composeOne");
  fill(vcs_, c.vc_, true, "vcomp");
  fill(hcs_, c.hc_, true, "hcomp");

  for (int f = 0; f < c.numOne(); ++f) c.oneHom_[key(c.one_[f].src, c.one_[f].dst)].push_back(f);
  for (int t = 0; t < c.numTwo(); ++t) {
    c.twoHom_[key(c.two_[t].src, c.two_[t].dst)].push_back(t);
    const OneCell& f = c.one_[c.two_[t].src];
    c.twoAt_[key(f.src, f.dst)].push_back(t);
  }
  prepared_ = false;
  return std::move(pending_);
}

ValidationReport validate_fin_2cat(const Fin2Cat& a) {
  ValidationReport rep;
  for (int o = 0; o < a.numObjects(); ++o) {
    const OneCell& f = a.one(a.idOne(o));
    if (f.src != o || f.dst != o)
      rep.add("idOne of " + a.objectId(o) + " is not an endo-1-cell");
  }
  for (int t = 0; t < a.numTwo(); ++t) {
    const OneCell& s = a.one(a.two(t).src);
    const OneCell& d = a.one(a.two(t).dst);
    if (s.src != d.src || s.dst != d.dst)
      rep.add("2-cell " + a.two(t).id + " is not between parallel 1-cells");
  }
  for (int f = 0; f < a.numOne(); ++f) {
    const TwoCell& t = a.two(a.idTwo(f));
    if (t.src != f || t.dst != f) rep.add("idTwo of " + a.one(f).id + " is not an endo-2-cell");
  }
  if (!rep.ok()) return rep;

  // 1-cell level: totality, units, associativity.
  for (int g = 0; g < a.numOne(); ++g)
    for (int f = 0; f < a.numOne(); ++f) {
      bool composable = a.one(f).dst == a.one(g).src;
      int gf = a.composeOne(g, f);
      if (composable && gf < 0)
        rep.add("composeOne missing for (" + a.one(g).id + "," + a.one(f).id + ")");
      if (!composable && gf >= 0)
        rep.add("composeOne defined for non-composable (" + a.one(g).id + "," + a.one(f).id + ")");
      if (composable && gf >= 0 &&
          (a.one(gf).src != a.one(f).src || a.one(gf).dst != a.one(g).dst))
        rep.add("composeOne endpoints wrong for (" + a.one(g).id + "," + a.one(f).id + ")");
    }
  if (!rep.ok()) return rep;
  for (int f = 0; f < a.numOne(); ++f) {
    if (a.composeOne(a.idOne(a.one(f).dst), f) != f || a.composeOne(f, a.idOne(a.one(f).src)) != f)
      rep.add("1-cell unit law fails at " + a.one(f).id);
  }
  for (int h = 0; h < a.numOne(); ++h)
    for (int g = 0; g < a.numOne(); ++g) {
      if (a.one(g).dst != a.one(h).src) continue;
      for (int f = 0; f < a.numOne(); ++f) {
        if (a.one(f).dst != a.one(g).src) continue;
        if (a.composeOne(h, a.composeOne(g, f)) != a.composeOne(a.composeOne(h, g), f))
          rep.add("1-cell associativity fails at (" + a.one(h).id + "," + a.one(g).id + "," +
                  a.one(f).id + ")");
      }
    }

  // Local categories: vertical composition.
  for (int x = 0; x < a.numObjects(); ++x)
    for (int y = 0; y < a.numObjects(); ++y) {
      if (a.oneHom(x, y).empty()) continue;
      ValidationReport local = validate_fin_cat(*a.localHom(x, y));
      for (auto& p : local.problems)
        rep.add("local category at (" + a.objectId(x) + "," + a.objectId(y) + "): " + p);
    }

  // Horizontal composition: definedness and boundaries.
  for (int bt = 0; bt < a.numTwo(); ++bt)
    for (int at = 0; at < a.numTwo(); ++at) {
      const OneCell& af = a.one(a.two(at).src);
      const OneCell& bf = a.one(a.two(bt).src);
      bool composable = af.dst == bf.src;
      int h = a.hcomp(bt, at);
      if (composable && h < 0)
        rep.add("hcomp missing for (" + a.two(bt).id + "," + a.two(at).id + ")");
      if (!composable && h >= 0)
        rep.add("hcomp defined for non-composable (" + a.two(bt).id + "," + a.two(at).id + ")");
      if (composable && h >= 0) {
        if (a.two(h).src != a.composeOne(a.two(bt).src, a.two(at).src) ||
            a.two(h).dst != a.composeOne(a.two(bt).dst, a.two(at).dst))
          rep.add("hcomp boundary wrong for (" + a.two(bt).id + "," + a.two(at).id + ")");
      }
    }
  if (!rep.ok()) return rep;

  // Horizontal units and associativity.
  for (int t = 0; t < a.numTwo(); ++t) {
    const OneCell& f = a.one(a.two(t).src);
    if (a.hcomp(a.idTwo(a.idOne(f.dst)), t) != t || a.hcomp(t, a.idTwo(a.idOne(f.src))) != t)
      rep.add("horizontal unit law fails at " + a.two(t).id);
  }
  for (int ct = 0; ct < a.numTwo(); ++ct)
    for (int bt = 0; bt < a.numTwo(); ++bt) {
      if (a.one(a.two(bt).src).dst != a.one(a.two(ct).src).src) continue;
      for (int at = 0; at < a.numTwo(); ++at) {
        if (a.one(a.two(at).src).dst != a.one(a.two(bt).src).src) continue;
        if (a.hcomp(ct, a.hcomp(bt, at)) != a.hcomp(a.hcomp(ct, bt), at))
          rep.add("horizontal associativity fails at (" + a.two(ct).id + "," + a.two(bt).id + "," +
                  a.two(at).id + ")");
      }
    }

  // Identity 2-cells compose horizontally to identity 2-cells.
  for (int g = 0; g < a.numOne(); ++g)
    for (int f = 0; f < a.numOne(); ++f) {
      if (a.one(f).dst != a.one(g).src) continue;
      if (a.hcomp(a.idTwo(g), a.idTwo(f)) != a.idTwo(a.composeOne(g, f)))
        rep.add("identity 2-cells do not compose to identity at (" + a.one(g).id + "," +
                a.one(f).id + ")");
    }

  // Interchange.
  for (int b2 = 0; b2 < a.numTwo(); ++b2)
    for (int b1 = 0; b1 < a.numTwo(); ++b1) {
      if (a.two(b1).dst != a.two(b2).src) continue;
      for (int a2 = 0; a2 < a.numTwo(); ++a2) {
        if (a.one(a.two(a2).src).dst != a.one(a.two(b2).src).src) continue;
        for (int a1 = 0; a1 < a.numTwo(); ++a1) {
          if (a.two(a1).dst != a.two(a2).src) continue;
          int lhs = a.hcomp(a.vcomp(b2, b1), a.vcomp(a2, a1));
          int rhs = a.vcomp(a.hcomp(b2, a2), a.hcomp(b1, a1));
          if (lhs != rhs)
            rep.add("interchange fails at ((" + a.two(b2).id + "," + a.two(b1).id + "),(" +
                    a.two(a2).id + "," + a.two(a1).id + "))");
        }
      }
    }
  return rep;
}

std::string two_id_of(const std::string& oneCellId) { return "2id(" + escape_id(oneCellId) + ")"; }

TwoCatPtr locally_discrete(const CatPtr& c) {
  Fin2CatBuilder b;
  for (const auto& o : c->objects()) b.addObject(o);
  for (const auto& m : c->mors()) {
    b.addOne(m.id, c->objectId(m.src), c->objectId(m.dst));
    b.addTwo(two_id_of(m.id), m.id, m.id);
  }
  const Fin2Cat& tc = b.prepare();
  (void)tc;
  for (int o = 0; o < c->numObjects(); ++o) {
    b.setIdOne(c->objectId(o), c->mor(c->identity(o)).id);
  }
  for (int m = 0; m < c->numMors(); ++m) b.setIdTwo(c->mor(m).id, two_id_of(c->mor(m).id));
  for (int g = 0; g < c->numMors(); ++g)
    for (int f = 0; f < c->numMors(); ++f) {
      int gf = c->compose(g, f);
      if (gf < 0) continue;
      b.setComposeOne(c->mor(g).id, c->mor(f).id, c->mor(gf).id);
      b.setHcomp(two_id_of(c->mor(g).id), two_id_of(c->mor(f).id), two_id_of(c->mor(gf).id));
    }
  for (int m = 0; m < c->numMors(); ++m)
    b.setVcomp(two_id_of(c->mor(m).id), two_id_of(c->mor(m).id), two_id_of(c->mor(m).id));
  return b.buildShared();
}

CatPtr underlying_category(const Fin2Cat& a) {
  FinCatBuilder b;
  for (const auto& o : a.objects()) b.addObject(o);
  for (int f = 0; f < a.numOne(); ++f)
    b.addMor(a.one(f).id, a.objectId(a.one(f).src), a.objectId(a.one(f).dst));
  const FinCat& c = b.prepare();
  (void)c;
  for (int o = 0; o < a.numObjects(); ++o) b.setIdentityByIndex(o, a.idOne(o));
  for (int g = 0; g < a.numOne(); ++g)
    for (int f = 0; f < a.numOne(); ++f) {
      int gf = a.composeOne(g, f);
      if (gf >= 0) b.setComposeByIndex(g, f, gf);
    }
  return b.buildShared();
}

TwoCatPtr dualize_2cat(const Fin2Cat& a, DualMode mode) {
  bool op = mode == DualMode::Op || mode == DualMode::Coop;
  bool co = mode == DualMode::Co || mode == DualMode::Coop;
  Fin2CatBuilder b;
  for (const auto& o : a.objects()) b.addObject(o);
  for (int f = 0; f < a.numOne(); ++f) {
    const OneCell& c = a.one(f);
    b.addOne(c.id, a.objectId(op ? c.dst : c.src), a.objectId(op ? c.src : c.dst));
  }
  for (int t = 0; t < a.numTwo(); ++t) {
    const TwoCell& c = a.two(t);
    b.addTwo(c.id, a.one(co ? c.dst : c.src).id, a.one(co ? c.src : c.dst).id);
  }
  const Fin2Cat& dc = b.prepare();
  (void)dc;
  // ids are unchanged, so indices match the original
  for (int o = 0; o < a.numObjects(); ++o) b.setIdOneByIndex(o, a.idOne(o));
  for (int f = 0; f < a.numOne(); ++f) b.setIdTwoByIndex(f, a.idTwo(f));
  for (int g = 0; g < a.numOne(); ++g)
    for (int f = 0; f < a.numOne(); ++f) {
      int gf = op ? a.composeOne(f, g) : a.composeOne(g, f);
      if (gf >= 0) b.setComposeOneByIndex(g, f, gf);
    }
  for (int t = 0; t < a.numTwo(); ++t)
    for (int s = 0; s < a.numTwo(); ++s) {
      int ts = co ? a.vcomp(s, t) : a.vcomp(t, s);
      if (ts >= 0) b.setVcompByIndex(t, s, ts);
      int hs = op ? a.hcomp(s, t) : a.hcomp(t, s);
      if (hs >= 0) b.setHcompByIndex(t, s, hs);
    }
  return b.buildShared();
}

TwoCatPtr product_2cat(const TwoCatPtr& a, const TwoCatPtr& b, Budget& budget) {
  budget.charge(static_cast<long long>(a->numObjects()) * b->numObjects() +
                    static_cast<long long>(a->numOne()) * b->numOne() +
                    static_cast<long long>(a->numTwo()) * b->numTwo(),
                "product 2-category cells");
  Fin2CatBuilder bd;
  for (const auto& x : a->objects())
    for (const auto& y : b->objects()) bd.addObject(pair_id(x, y));
  for (int f = 0; f < a->numOne(); ++f)
    for (int g = 0; g < b->numOne(); ++g)
      bd.addOne(pair_id(a->one(f).id, b->one(g).id),
                pair_id(a->objectId(a->one(f).src), b->objectId(b->one(g).src)),
                pair_id(a->objectId(a->one(f).dst), b->objectId(b->one(g).dst)));
  for (int s = 0; s < a->numTwo(); ++s)
    for (int t = 0; t < b->numTwo(); ++t)
      bd.addTwo(pair_id(a->two(s).id, b->two(t).id),
                pair_id(a->one(a->two(s).src).id, b->one(b->two(t).src).id),
                pair_id(a->one(a->two(s).dst).id, b->one(b->two(t).dst).id));

  const Fin2Cat& pc = bd.prepare();
  std::vector<std::vector<int32_t>> oneAt(a->numOne(), std::vector<int32_t>(b->numOne()));
  std::vector<std::vector<int32_t>> twoAt(a->numTwo(), std::vector<int32_t>(b->numTwo()));
  for (int f = 0; f < a->numOne(); ++f)
    for (int g = 0; g < b->numOne(); ++g)
      oneAt[f][g] = pc.oneIndexChecked(pair_id(a->one(f).id, b->one(g).id));
  for (int s = 0; s < a->numTwo(); ++s)
    for (int t = 0; t < b->numTwo(); ++t)
      twoAt[s][t] = pc.twoIndexChecked(pair_id(a->two(s).id, b->two(t).id));

  for (int x = 0; x < a->numObjects(); ++x)
    for (int y = 0; y < b->numObjects(); ++y) {
      int o = pc.objIndexChecked(pair_id(a->objectId(x), b->objectId(y)));
      bd.setIdOneByIndex(o, oneAt[a->idOne(x)][b->idOne(y)]);
    }
  for (int f = 0; f < a->numOne(); ++f)
    for (int g = 0; g < b->numOne(); ++g)
      bd.setIdTwoByIndex(oneAt[f][g], twoAt[a->idTwo(f)][b->idTwo(g)]);

  for (int g1 = 0; g1 < a->numOne(); ++g1)
    for (int f1 = 0; f1 < a->numOne(); ++f1) {
      int c1 = a->composeOne(g1, f1);
      if (c1 < 0) continue;
      for (int g2 = 0; g2 < b->numOne(); ++g2)
        for (int f2 = 0; f2 < b->numOne(); ++f2) {
          int c2 = b->composeOne(g2, f2);
          if (c2 < 0) continue;
          budget.charge(1, "product 2-category composition");
          bd.setComposeOneByIndex(oneAt[g1][f2 * 0 + g2], oneAt[f1][f2], oneAt[c1][c2]);
        }
    }
  for (int s1 = 0; s1 < a->numTwo(); ++s1)
    for (int t1 = 0; t1 < a->numTwo(); ++t1) {
      int v1 = a->vcomp(s1, t1);
      int h1 = a->hcomp(s1, t1);
      if (v1 < 0 && h1 < 0) continue;
      for (int s2 = 0; s2 < b->numTwo(); ++s2)
        for (int t2 = 0; t2 < b->numTwo(); ++t2) {
          budget.charge(1, "product 2-category 2-composition");
          if (v1 >= 0) {
            int v2 = b->vcomp(s2, t2);
            if (v2 >= 0) bd.setVcompByIndex(twoAt[s1][s2], twoAt[t1][t2], twoAt[v1][v2]);
          }
          if (h1 >= 0) {
            int h2 = b->hcomp(s2, t2);
            if (h2 >= 0) bd.setHcompByIndex(twoAt[s1][s2], twoAt[t1][t2], twoAt[h1][h2]);
          }
        }
    }
  return bd.buildShared();
}

TwoCatPtr terminal_2cat() {
  static TwoCatPtr one = locally_discrete(terminal_cat());
  return one;
}

ValidationReport validate_shape_map(const ShapeMap& m) {
  ValidationReport rep;
  const Fin2Cat& a = *m.dom;
  const Fin2Cat& b = *m.cod;
  for (int f = 0; f < a.numOne(); ++f) {
    const OneCell& c = a.one(f);
    const OneCell& i = b.one(m.oneMap[f]);
    if (i.src != m.objMap[c.src] || i.dst != m.objMap[c.dst])
      rep.add("shape map: 1-cell image endpoints wrong at " + c.id);
  }
  for (int t = 0; t < a.numTwo(); ++t) {
    const TwoCell& c = a.two(t);
    const TwoCell& i = b.two(m.twoMap[t]);
    if (i.src != m.oneMap[c.src] || i.dst != m.oneMap[c.dst])
      rep.add("shape map: 2-cell image endpoints wrong at " + c.id);
  }
  for (int o = 0; o < a.numObjects(); ++o)
    if (m.oneMap[a.idOne(o)] != b.idOne(m.objMap[o]))
      rep.add("shape map: identity 1-cell not preserved at " + a.objectId(o));
  for (int f = 0; f < a.numOne(); ++f)
    if (m.twoMap[a.idTwo(f)] != b.idTwo(m.oneMap[f]))
      rep.add("shape map: identity 2-cell not preserved at " + a.one(f).id);
  for (int g = 0; g < a.numOne(); ++g)
    for (int f = 0; f < a.numOne(); ++f) {
      int gf = a.composeOne(g, f);
      if (gf >= 0 && b.composeOne(m.oneMap[g], m.oneMap[f]) != m.oneMap[gf])
        rep.add("shape map: 1-cell composition not preserved");
    }
  for (int s = 0; s < a.numTwo(); ++s)
    for (int t = 0; t < a.numTwo(); ++t) {
      int v = a.vcomp(s, t);
      if (v >= 0 && b.vcomp(m.twoMap[s], m.twoMap[t]) != m.twoMap[v])
        rep.add("shape map: vertical composition not preserved");
      int h = a.hcomp(s, t);
      if (h >= 0 && b.hcomp(m.twoMap[s], m.twoMap[t]) != m.twoMap[h])
        rep.add("shape map: horizontal composition not preserved");
    }
  return rep;
}

}  // namespace lendkit
