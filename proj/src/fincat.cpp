#include "lendkit/fincat.hpp"

#include <algorithm>

namespace lendkit {

namespace {
constexpr long long kDenseCellLimit = 6000000;  // n*n ints kept dense below this

int64_t key(int a, int b) { return (static_cast<int64_t>(a) << 32) | static_cast<uint32_t>(b); }

const std::vector<int32_t> kEmptyHom;
}  // namespace

ComposeTable::ComposeTable(int n, long long definedPairsHint) : n_(n) {
  dense_ = static_cast<long long>(n) * n <= kDenseCellLimit;
  if (dense_) {
    mat_.assign(static_cast<size_t>(n) * n, -1);
  } else {
    map_.reserve(static_cast<size_t>(definedPairsHint));
  }
}

void ComposeTable::set(int g, int f, int gf) {
  if (dense_) {
    auto& cell = mat_[static_cast<size_t>(g) * n_ + f];
    if (cell < 0) ++defined_;
    cell = gf;
  } else {
    auto [it, inserted] = map_.insert_or_assign(key(g, f), gf);
    (void)it;
    if (inserted) ++defined_;
  }
}

int ComposeTable::get(int g, int f) const {
  if (dense_) return mat_[static_cast<size_t>(g) * n_ + f];
  auto it = map_.find(key(g, f));
  return it == map_.end() ? -1 : it->second;
}

bool ComposeTable::operator==(const ComposeTable& o) const {
  if (n_ != o.n_ || defined_ != o.defined_) return false;
  if (dense_ && o.dense_) return mat_ == o.mat_;
  for (int g = 0; g < n_; ++g)
    for (int f = 0; f < n_; ++f)
      if (get(g, f) != o.get(g, f)) return false;
  return true;
}

int FinCat::objIndex(const std::string& id) const {
  auto it = objIdx_.find(id);
  return it == objIdx_.end() ? -1 : it->second;
}

int FinCat::morIndex(const std::string& id) const {
  auto it = morIdx_.find(id);
  return it == morIdx_.end() ? -1 : it->second;
}

int FinCat::objIndexChecked(const std::string& id) const {
  int i = objIndex(id);
  if (i < 0) throw InputError("unknown object id: " + id);
  return i;
}

int FinCat::morIndexChecked(const std::string& id) const {
  int i = morIndex(id);
  if (i < 0) throw InputError("unknown morphism id: " + id);
  return i;
}

const std::vector<int32_t>& FinCat::hom(int x, int y) const {
  auto it = hom_.find(key(x, y));
  return it == hom_.end() ? kEmptyHom : it->second;
}

bool FinCat::isInvertible(int m) const { return inverseOf(m) >= 0; }

int FinCat::inverseOf(int m) const {
  const Mor& mm = mors_[m];
  for (int32_t n : hom(mm.dst, mm.src)) {
    if (compose(n, m) == identity_[mm.src] && compose(m, n) == identity_[mm.dst]) return n;
  }
  return -1;
}

bool FinCat::operator==(const FinCat& o) const {
  if (objects_ != o.objects_) return false;
  if (mors_.size() != o.mors_.size()) return false;
  for (size_t i = 0; i < mors_.size(); ++i) {
    if (mors_[i].id != o.mors_[i].id || mors_[i].src != o.mors_[i].src ||
        mors_[i].dst != o.mors_[i].dst)
      return false;
  }
  return identity_ == o.identity_ && comp_ == o.comp_;
}

void FinCatBuilder::addObject(std::string id) { objects_.push_back(std::move(id)); }

void FinCatBuilder::addMor(std::string id, std::string src, std::string dst) {
  mors_.push_back({std::move(id), std::move(src), std::move(dst)});
}

void FinCatBuilder::setIdentity(const std::string& obj, const std::string& mor) {
  identities_.emplace_back(obj, mor);
}

void FinCatBuilder::setCompose(const std::string& g, const std::string& f, const std::string& gf) {
  composes_.push_back({g, f, gf});
}

const FinCat& FinCatBuilder::prepare(long long composeHint) {
  FinCat& c = pending_;
  c.objects_ = objects_;
  std::sort(c.objects_.begin(), c.objects_.end());
  for (size_t i = 0; i + 1 < c.objects_.size(); ++i) {
    if (c.objects_[i] == c.objects_[i + 1]) throw InputError("duplicate object id: " + c.objects_[i]);
  }
  for (size_t i = 0; i < c.objects_.size(); ++i) c.objIdx_[c.objects_[i]] = static_cast<int32_t>(i);

  std::vector<RawMor> sorted = std::move(mors_);
  std::sort(sorted.begin(), sorted.end(),
            [](const RawMor& a, const RawMor& b) { return a.id < b.id; });
  c.mors_.reserve(sorted.size());
  for (auto& rm : sorted) {
    if (c.morIdx_.count(rm.id)) throw InputError("duplicate morphism id: " + rm.id);
    auto si = c.objIdx_.find(rm.src);
    auto di = c.objIdx_.find(rm.dst);
    if (si == c.objIdx_.end()) throw InputError("morphism " + rm.id + " has unknown src: " + rm.src);
    if (di == c.objIdx_.end()) throw InputError("morphism " + rm.id + " has unknown dst: " + rm.dst);
    c.morIdx_[rm.id] = static_cast<int32_t>(c.mors_.size());
    c.mors_.push_back({std::move(rm.id), si->second, di->second});
  }

  c.identity_.assign(c.objects_.size(), -1);
  c.comp_ = ComposeTable(c.numMors(), composeHint > 0 ? composeHint
                                                      : static_cast<long long>(composes_.size()));
  prepared_ = true;
  return c;
}

void FinCatBuilder::setIdentityByIndex(int obj, int mor) { pending_.identity_[obj] = mor; }

void FinCatBuilder::setComposeByIndex(int g, int f, int gf) { pending_.comp_.set(g, f, gf); }

FinCat FinCatBuilder::build() {
  if (!prepared_) prepare(0);
  FinCat& c = pending_;

  for (const auto& [obj, mor] : identities_) {
    int o = c.objIndex(obj);
    if (o < 0) throw InputError("identity entry for unknown object: " + obj);
    int m = c.morIndex(mor);
    if (m < 0) throw InputError("identity entry references unknown morphism: " + mor);
    if (c.identity_[o] >= 0 && c.identity_[o] != m)
      throw InputError("conflicting identity entries for object: " + obj);
    c.identity_[o] = m;
  }
  for (size_t o = 0; o < c.objects_.size(); ++o) {
    if (c.identity_[o] < 0) throw InputError("missing identity for object: " + c.objects_[o]);
  }

  for (const auto& t : composes_) {
    int g = c.morIndex(t[0]), f = c.morIndex(t[1]), gf = c.morIndex(t[2]);
    if (g < 0 || f < 0 || gf < 0)
      throw InputError("compose entry references unknown morphism: [" + t[0] + "," + t[1] + "," +
                       t[2] + "]");
    int prev = c.comp_.get(g, f);
    if (prev >= 0 && prev != gf)
      throw InputError("conflicting compose entries for (" + t[0] + "," + t[1] + ")");
    c.comp_.set(g, f, gf);
  }

  for (int m = 0; m < c.numMors(); ++m) {
    c.hom_[key(c.mors_[m].src, c.mors_[m].dst)].push_back(m);
  }
  prepared_ = false;
  return std::move(pending_);
}

ValidationReport validate_fin_cat(const FinCat& c) {
  ValidationReport rep;
  for (int o = 0; o < c.numObjects(); ++o) {
    const Mor& id = c.mor(c.identity(o));
    if (id.src != o || id.dst != o)
      rep.add("identity law: identity of object " + c.objectId(o) + " (" + id.id +
              ") is not an endomorphism of it");
  }
  const int n = c.numMors();
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      int gf = c.compose(g, f);
      bool composable = c.mor(f).dst == c.mor(g).src;
      if (composable && gf < 0)
        rep.add("totality: compose(" + c.mor(g).id + "," + c.mor(f).id + ") is missing");
      if (!composable && gf >= 0)
        rep.add("composability: compose(" + c.mor(g).id + "," + c.mor(f).id +
                ") defined for a non-composable pair");
      if (composable && gf >= 0) {
        if (c.mor(gf).src != c.mor(f).src || c.mor(gf).dst != c.mor(g).dst)
          rep.add("endpoint law: compose(" + c.mor(g).id + "," + c.mor(f).id + ") = " +
                  c.mor(gf).id + " has wrong endpoints");
      }
    }
  }
  if (!rep.ok()) return rep;  // unit/assoc checks assume a total well-typed table

  for (int f = 0; f < n; ++f) {
    const Mor& m = c.mor(f);
    if (c.compose(c.identity(m.dst), f) != f)
      rep.add("unit law: id_" + c.objectId(m.dst) + " . " + m.id + " != " + m.id);
    if (c.compose(f, c.identity(m.src)) != f)
      rep.add("unit law: " + m.id + " . id_" + c.objectId(m.src) + " != " + m.id);
  }
  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < n; ++g) {
      if (c.mor(g).dst != c.mor(h).src) continue;
      int hg = c.compose(h, g);
      for (int f = 0; f < n; ++f) {
        if (c.mor(f).dst != c.mor(g).src) continue;
        int gf = c.compose(g, f);
        if (c.compose(h, gf) != c.compose(hg, f))
          rep.add("associativity: (" + c.mor(h).id + "." + c.mor(g).id + ")." + c.mor(f).id +
                  " != " + c.mor(h).id + ".(" + c.mor(g).id + "." + c.mor(f).id + ")");
      }
    }
  }
  return rep;
}

}  // namespace lendkit
