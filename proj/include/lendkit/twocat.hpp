#pragma once

#include "lendkit/funct.hpp"

namespace lendkit {

struct OneCell {
  std::string id;
  int32_t src = -1, dst = -1;  // object indices
};

struct TwoCell {
  std::string id;
  int32_t src = -1, dst = -1;  // parallel 1-cell indices
};

// A finite 2-category with tabulated 1-cell composition and vertical /
// horizontal 2-cell composition.
class Fin2Cat {
 public:
  int numObjects() const { return static_cast<int>(objects_.size()); }
  int numOne() const { return static_cast<int>(one_.size()); }
  int numTwo() const { return static_cast<int>(two_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& objectId(int o) const { return objects_[o]; }
  const OneCell& one(int i) const { return one_[i]; }
  const TwoCell& two(int i) const { return two_[i]; }

  int objIndex(const std::string& id) const;
  int oneIndex(const std::string& id) const;
  int twoIndex(const std::string& id) const;
  int objIndexChecked(const std::string& id) const;
  int oneIndexChecked(const std::string& id) const;
  int twoIndexChecked(const std::string& id) const;

  int idOne(int obj) const { return idOne_[obj]; }
  int idTwo(int cell) const { return idTwo_[cell]; }
  bool isIdentityOne(int cell) const { return idOne_[one_[cell].src] == cell; }
  bool isIdentityTwo(int t) const { return idTwo_[two_[t].src] == t; }

  int composeOne(int g, int f) const { return c1_.get(g, f); }
  int vcomp(int b, int a) const { return vc_.get(b, a); }
  int hcomp(int b, int a) const { return hc_.get(b, a); }
  // whiskering is derived: hcomp with identity 2-cells
  int whiskerL(int oneCell, int t) const { return hc_.get(idTwo_[oneCell], t); }
  int whiskerR(int t, int oneCell) const { return hc_.get(t, idTwo_[oneCell]); }

  const std::vector<int32_t>& oneHom(int a, int b) const;   // 1-cells a -> b
  const std::vector<int32_t>& twoHom(int f, int g) const;   // 2-cells f => g
  const std::vector<int32_t>& twoCellsAt(int a, int b) const;  // all 2-cells between A,B

  // Local hom-category at (a, b): 1-cells as objects, 2-cells as morphisms.
  CatPtr localHom(int a, int b) const;

  bool locallyDiscrete() const;
  bool operator==(const Fin2Cat& o) const;

  friend class Fin2CatBuilder;

 private:
  std::vector<std::string> objects_;
  std::vector<OneCell> one_;
  std::vector<TwoCell> two_;
  std::vector<int32_t> idOne_, idTwo_;
  ComposeTable c1_, vc_, hc_;
  std::unordered_map<std::string, int32_t> objIdx_, oneIdx_, twoIdx_;
  std::unordered_map<int64_t, std::vector<int32_t>> oneHom_, twoHom_, twoAt_;
};

using TwoCatPtr = std::shared_ptr<const Fin2Cat>;

class Fin2CatBuilder {
 public:
  void addObject(std::string id);
  void addOne(std::string id, std::string src, std::string dst);
  void addTwo(std::string id, std::string src, std::string dst);
  void setIdOne(const std::string& obj, const std::string& cell);
  void setIdTwo(const std::string& cell, const std::string& t);
  void setComposeOne(const std::string& g, const std::string& f, const std::string& gf);
  void setVcomp(const std::string& b, const std::string& a, const std::string& ba);
  void setHcomp(const std::string& b, const std::string& a, const std::string& ba);

  const Fin2Cat& prepare(long long oneHint = 0, long long vHint = 0, long long hHint = 0);
  void setIdOneByIndex(int obj, int cell) { pending_.idOne_[obj] = cell; }
  void setIdTwoByIndex(int cell, int t) { pending_.idTwo_[cell] = t; }
  void setComposeOneByIndex(int g, int f, int gf) { pending_.c1_.set(g, f, gf); }
  void setVcompByIndex(int b, int a, int ba) { pending_.vc_.set(b, a, ba); }
  void setHcompByIndex(int b, int a, int ba) { pending_.hc_.set(b, a, ba); }

  Fin2Cat build();
  TwoCatPtr buildShared() { return std::make_shared<const Fin2Cat>(build()); }

 private:
  struct RawCell {
    std::string id, src, dst;
  };
  std::vector<std::string> objects_;
  std::vector<RawCell> one_, two_;
  std::vector<std::pair<std::string, std::string>> idOnes_, idTwos_;
  std::vector<std::array<std::string, 3>> c1s_, vcs_, hcs_;
  Fin2Cat pending_;
  bool prepared_ = false;
};

ValidationReport validate_fin_2cat(const Fin2Cat& a);

enum class DualMode { Op, Co, Coop };

TwoCatPtr locally_discrete(const CatPtr& c);
CatPtr underlying_category(const Fin2Cat& a);
TwoCatPtr dualize_2cat(const Fin2Cat& a, DualMode mode);
TwoCatPtr product_2cat(const TwoCatPtr& a, const TwoCatPtr& b, Budget& budget);
TwoCatPtr terminal_2cat();

std::string two_id_of(const std::string& oneCellId);

// A strict 2-functor between shapes; used to reindex diagrams.
struct ShapeMap {
  TwoCatPtr dom, cod;
  std::vector<int32_t> objMap, oneMap, twoMap;
};
ValidationReport validate_shape_map(const ShapeMap& m);

}  // namespace lendkit
