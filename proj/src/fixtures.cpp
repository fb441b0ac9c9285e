#include "lendkit/fixtures.hpp"

#include "lendkit/cat_ops.hpp"

namespace lendkit::fixtures {

namespace {

CatPtr build_poset(const std::vector<std::string>& objs,
                   const std::vector<std::array<std::string, 3>>& arrows) {
  // Thin categories: composites are the unique morphism between the endpoints.
  std::vector<std::array<std::string, 3>> all;
  for (const auto& o : objs) all.push_back({"id" + o, o, o});
  all.insert(all.end(), arrows.begin(), arrows.end());

  FinCatBuilder b;
  for (const auto& o : objs) {
    b.addObject(o);
    b.setIdentity(o, "id" + o);
  }
  for (const auto& a : all) b.addMor(a[0], a[1], a[2]);
  for (const auto& g : all)
    for (const auto& f : all) {
      if (f[2] != g[1]) continue;
      const std::array<std::string, 3>* found = nullptr;
      for (const auto& h : all)
        if (h[1] == f[1] && h[2] == g[2]) {
          if (found) throw ContractError("build_poset: parallel arrows between " + f[1] + " and " + g[2]);
          found = &h;
        }
      if (!found) throw ContractError("build_poset: missing composite " + g[0] + "." + f[0]);
      b.setCompose(g[0], f[0], (*found)[0]);
    }
  return b.buildShared();
}

}  // namespace

CatPtr one() { return terminal_cat(); }

CatPtr two() {
  static CatPtr c = build_poset({"0", "1"}, {{"a", "0", "1"}});
  return c;
}

CatPtr discrete2() {
  static CatPtr c = build_poset({"0", "1"}, {});
  return c;
}

CatPtr parallel_pair() {
  static CatPtr c = [] {
    FinCatBuilder b;
    b.addObject("0");
    b.addObject("1");
    b.addMor("id0", "0", "0");
    b.addMor("id1", "1", "1");
    b.addMor("u", "0", "1");
    b.addMor("v", "0", "1");
    b.setIdentity("0", "id0");
    b.setIdentity("1", "id1");
    b.setCompose("id0", "id0", "id0");
    b.setCompose("id1", "id1", "id1");
    b.setCompose("u", "id0", "u");
    b.setCompose("id1", "u", "u");
    b.setCompose("v", "id0", "v");
    b.setCompose("id1", "v", "v");
    return b.buildShared();
  }();
  return c;
}

CatPtr square_poset() {
  static CatPtr c = build_poset({"0", "a", "b", "3"}, {{"f0a", "0", "a"},
                                                       {"f0b", "0", "b"},
                                                       {"fa3", "a", "3"},
                                                       {"fb3", "b", "3"},
                                                       {"f03", "0", "3"}});
  return c;
}

CatPtr iso_pair() {
  static CatPtr c = [] {
    FinCatBuilder b;
    b.addObject("x");
    b.addObject("y");
    b.addMor("idx", "x", "x");
    b.addMor("idy", "y", "y");
    b.addMor("f", "x", "y");
    b.addMor("g", "y", "x");
    b.setIdentity("x", "idx");
    b.setIdentity("y", "idy");
    b.setCompose("idx", "idx", "idx");
    b.setCompose("idy", "idy", "idy");
    b.setCompose("f", "idx", "f");
    b.setCompose("idy", "f", "f");
    b.setCompose("g", "idy", "g");
    b.setCompose("idx", "g", "g");
    b.setCompose("g", "f", "idx");
    b.setCompose("f", "g", "idy");
    return b.buildShared();
  }();
  return c;
}

CatPtr asym3() {
  static CatPtr c = build_poset({"p", "q", "r"}, {{"s", "p", "q"}, {"t", "p", "r"}});
  return c;
}

CatPtr with_products() { return square_poset(); }

TwoCatPtr two_cell_shape() {
  static TwoCatPtr c = [] {
    Fin2CatBuilder b;
    b.addObject("P");
    b.addObject("Q");
    b.addOne("idP", "P", "P");
    b.addOne("idQ", "Q", "Q");
    b.addOne("u", "P", "Q");
    b.addOne("v", "P", "Q");
    b.setIdOne("P", "idP");
    b.setIdOne("Q", "idQ");
    for (const char* f : {"idP", "idQ", "u", "v"}) {
      b.addTwo(two_id_of(f), f, f);
      b.setIdTwo(f, two_id_of(f));
    }
    b.addTwo("mu", "u", "v");

    b.setComposeOne("idP", "idP", "idP");
    b.setComposeOne("idQ", "idQ", "idQ");
    b.setComposeOne("u", "idP", "u");
    b.setComposeOne("v", "idP", "v");
    b.setComposeOne("idQ", "u", "u");
    b.setComposeOne("idQ", "v", "v");

    for (const char* f : {"idP", "idQ", "u", "v"})
      b.setVcomp(two_id_of(f), two_id_of(f), two_id_of(f));
    b.setVcomp("mu", two_id_of("u"), "mu");
    b.setVcomp(two_id_of("v"), "mu", "mu");

    b.setHcomp(two_id_of("idP"), two_id_of("idP"), two_id_of("idP"));
    b.setHcomp(two_id_of("idQ"), two_id_of("idQ"), two_id_of("idQ"));
    for (const char* f : {"u", "v"}) {
      b.setHcomp(two_id_of(f), two_id_of("idP"), two_id_of(f));
      b.setHcomp(two_id_of("idQ"), two_id_of(f), two_id_of(f));
    }
    b.setHcomp("mu", two_id_of("idP"), "mu");
    b.setHcomp(two_id_of("idQ"), "mu", "mu");
    return b.buildShared();
  }();
  return c;
}

}  // namespace lendkit::fixtures
