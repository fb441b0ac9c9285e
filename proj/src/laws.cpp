#include "lendkit/laws.hpp"

#include <chrono>
#include <functional>

#include "lendkit/fixtures.hpp"
#include "lendkit/iso.hpp"
#include "lendkit/serialize.hpp"
#include "lendkit/sharpflat.hpp"

namespace lendkit {

namespace {

using Clock = std::chrono::steady_clock;

struct LawContext {
  const Corpus* corpus;
  long long perInstanceBudget;
};

// One law instance: the runner catches BudgetExceeded as a skip and treats a
// false return or ContractError as a failure.
struct Instance {
  std::string id;
  std::function<bool(Budget&)> check;
  std::function<std::string()> replay;  // serialized input for failures
};

using InstanceFn = std::function<void(const LawContext&, std::vector<Instance>&)>;

std::string diagram_replay(const std::string& name, const DiagPtr& d) {
  DocumentEnvelope doc;
  doc.formatVersion = kFormatVersion;
  doc.kind = "diagram";
  doc.payload = diagram_to_json(*d);
  return "instance " + name + ":\n" + serialize_document(doc);
}

std::string pair_replay(const std::string& name, const DiagPtr& f, const DiagPtr& g) {
  DocumentEnvelope df{kFormatVersion, "diagram", diagram_to_json(*f)};
  DocumentEnvelope dg{kFormatVersion, "diagram", diagram_to_json(*g)};
  return "instance " + name + " (weight):\n" + serialize_document(df) + "(diagram):\n" +
         serialize_document(dg);
}

bool iso_cats(const CatPtr& a, const CatPtr& b, Budget& budget) {
  return is_isomorphic(a, b, budget).has_value();
}

// the arrow diagram 1 -> B picking b over the locally discrete arrow shape
DiagPtr arrow_diagram(const CatPtr& target, int obj, Budget& budget) {
  TwoCatPtr shape = locally_discrete(fixtures::two());
  TwoFunctorToCat g;
  g.base = shape;
  g.variance = Variance::Covariant;
  g.shape = shape;
  g.onObjects.resize(2);
  g.onObjects[shape->objIndexChecked("0")] = fixtures::one();
  g.onObjects[shape->objIndexChecked("1")] = target;
  Funct pick;
  pick.dom = fixtures::one();
  pick.cod = target;
  pick.objMap = {obj};
  pick.morMap = {target->identity(obj)};
  g.onOne.resize(3);
  g.onTwo.resize(3);
  g.onOne[shape->oneIndexChecked("id0")] = identity_funct(fixtures::one());
  g.onOne[shape->oneIndexChecked("id1")] = identity_funct(target);
  g.onOne[shape->oneIndexChecked("a")] = pick;
  for (int f = 0; f < 3; ++f) g.onTwo[shape->idTwo(f)] = identity_natt(g.onOne[f]);
  (void)budget;
  return share(std::move(g));
}

// -- law instance builders ---------------------------------------------------

void constant_end_instances(const LawContext&, std::vector<Instance>& out) {
  std::vector<std::pair<std::string, CatPtr>> shapes = {
      {"terminal", fixtures::one()},
      {"arrow", fixtures::two()},
      {"discrete-pair", fixtures::discrete2()},
      {"parallel-pair", fixtures::parallel_pair()}};
  std::vector<std::pair<std::string, CatPtr>> values = {
      {"terminal", fixtures::one()},
      {"arrow", fixtures::two()},
      {"discrete-pair", fixtures::discrete2()},
      {"parallel-pair", fixtures::parallel_pair()},
      {"iso-pair", fixtures::iso_pair()}};
  for (auto& [sn, sc] : shapes) {
    if (sc->numMors() > 7) continue;
    for (auto& [vn, vc] : values) {
      if (vc->numMors() > 7) continue;
      std::string name = sn + "/" + vn;
      CatPtr shapeCat = sc, valueCat = vc;
      out.push_back({name,
                     [shapeCat, valueCat](Budget& b) {
                       TwoCatPtr shape = locally_discrete(shapeCat);
                       DiagPtr d =
                           share(constant_diagram(shape, Variance::OpFirst, valueCat, b));
                       EndResult e = end_of(d, EndMode::Lax, b);
                       auto fc = functor_category(shapeCat, valueCat, b);
                       return iso_cats(e.category, fc.cat, b);
                     },
                     [name] { return "constant end instance " + name; }});
    }
  }
}

void descent_agrees_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    for (const CorpusDiagram& cd : entry.squares) {
      DiagPtr d = cd.diagram;
      std::string name = entry.name + "/" + cd.name;
      out.push_back({name,
                     [d](Budget& b) {
                       DescentEnd lhs = lax_end_via_descent(d, b);
                       if (!validate_wedge(d, EndMode::Lax, lhs.wedge).ok()) return false;
                       EndResult rhs = end_of(d, EndMode::Lax, b);
                       return iso_cats(lhs.category, rhs.category, b);
                     },
                     [name, d] { return diagram_replay(name, d); }});
    }
  }
}

void hom_formula_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    for (const CorpusPair& cp : entry.covariantPairs) {
      DiagPtr f = cp.weight, g = cp.diagram;
      std::string name = entry.name + "/" + cp.name;
      out.push_back({name,
                     [f, g](Budget& b) {
                       LaxHomResult hom = lax_hom_category(f, g, TransMode::Lax, b);
                       DiagPtr power = share(power_diagram(*f, *g, b));
                       EndResult e = end_of(power, EndMode::Lax, b);
                       return iso_cats(hom.cat, e.category, b);
                     },
                     [name, f, g] { return pair_replay(name, f, g); }});
    }
  }
}

void representable_commute_instances(const LawContext& ctx, std::vector<Instance>& out) {
  std::vector<std::pair<std::string, CatPtr>> xs = {{"terminal", fixtures::one()},
                                                    {"arrow", fixtures::two()}};
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    for (const CorpusDiagram& cd : entry.squares) {
      for (auto& [xn, xc] : xs) {
        DiagPtr d = cd.diagram;
        CatPtr x = xc;
        std::string name = entry.name + "/" + cd.name + "/[" + xn + ",-]";
        out.push_back({name,
                       [d, x](Budget& b) {
                         EndResult inner = end_of(d, EndMode::Lax, b);
                         auto lhs = functor_category(x, inner.category, b);
                         DiagPtr powered = share(postcompose_power(x, *d, b));
                         EndResult rhs = end_of(powered, EndMode::Lax, b);
                         return iso_cats(lhs.cat, rhs.category, b);
                       },
                       [name, d] { return diagram_replay(name, d); }});
      }
    }
  }
}

// reindex T over (A x B) as a triple diagram over base A with extra
// op(B) x B, or symmetrically.
DiagPtr curry_product_diagram(const DiagPtr& t, const TwoCatPtr& a, const TwoCatPtr& bShape,
                              bool overFirst, Budget& budget) {
  TwoCatPtr innerBase = overFirst ? a : bShape;
  TwoCatPtr outerBase = overFirst ? bShape : a;
  TwoCatPtr extra = square_shape(outerBase, budget);
  ShapeMap m;
  m.dom = triple_shape(innerBase, extra, budget);
  m.cod = t->shape;  // op(A x B) x (A x B)
  const Fin2Cat& prod = *t->base;  // A x B
  const Fin2Cat& ia = *innerBase;
  const Fin2Cat& ob = *outerBase;
  m.objMap.resize(m.dom->numObjects());
  m.oneMap.resize(m.dom->numOne());
  m.twoMap.resize(m.dom->numTwo());
  auto prodObj = [&](int x, int y) {
    return overFirst ? prod.objIndexChecked(pair_id(ia.objectId(x), ob.objectId(y)))
                     : prod.objIndexChecked(pair_id(ob.objectId(y), ia.objectId(x)));
  };
  auto prodOne = [&](int x, int y) {
    return overFirst ? prod.oneIndexChecked(pair_id(ia.one(x).id, ob.one(y).id))
                     : prod.oneIndexChecked(pair_id(ob.one(y).id, ia.one(x).id));
  };
  auto prodTwo = [&](int x, int y) {
    return overFirst ? prod.twoIndexChecked(pair_id(ia.two(x).id, ob.two(y).id))
                     : prod.twoIndexChecked(pair_id(ob.two(y).id, ia.two(x).id));
  };
  for (int a1 = 0; a1 < ia.numObjects(); ++a1)
    for (int a2 = 0; a2 < ia.numObjects(); ++a2)
      for (int b1 = 0; b1 < ob.numObjects(); ++b1)
        for (int b2 = 0; b2 < ob.numObjects(); ++b2) {
          int src = m.dom->objIndexChecked(
              pair_id(pair_id(ia.objectId(a1), ia.objectId(a2)),
                      pair_id(ob.objectId(b1), ob.objectId(b2))));
          int dst = t->shape->objIndexChecked(
              pair_id(prod.objectId(prodObj(a1, b1)), prod.objectId(prodObj(a2, b2))));
          m.objMap[src] = dst;
        }
  for (int f1 = 0; f1 < ia.numOne(); ++f1)
    for (int f2 = 0; f2 < ia.numOne(); ++f2)
      for (int g1 = 0; g1 < ob.numOne(); ++g1)
        for (int g2 = 0; g2 < ob.numOne(); ++g2) {
          int src = m.dom->oneIndexChecked(pair_id(pair_id(ia.one(f1).id, ia.one(f2).id),
                                                   pair_id(ob.one(g1).id, ob.one(g2).id)));
          int dst = t->shape->oneIndexChecked(
              pair_id(prod.one(prodOne(f1, g1)).id, prod.one(prodOne(f2, g2)).id));
          m.oneMap[src] = dst;
        }
  for (int u1 = 0; u1 < ia.numTwo(); ++u1)
    for (int u2 = 0; u2 < ia.numTwo(); ++u2)
      for (int w1 = 0; w1 < ob.numTwo(); ++w1)
        for (int w2 = 0; w2 < ob.numTwo(); ++w2) {
          int src = m.dom->twoIndexChecked(pair_id(pair_id(ia.two(u1).id, ia.two(u2).id),
                                                   pair_id(ob.two(w1).id, ob.two(w2).id)));
          int dst = t->shape->twoIndexChecked(
              pair_id(prod.two(prodTwo(u1, w1)).id, prod.two(prodTwo(u2, w2)).id));
          m.twoMap[src] = dst;
        }
  return share(precompose_diagram(*t, m, innerBase, extra, Variance::OpFirstExtra));
}

void fubini_instances(const LawContext&, std::vector<Instance>& out) {
  std::vector<std::tuple<std::string, CatPtr, CatPtr, CatPtr>> cases = {
      {"arrow*arrow/const", fixtures::two(), fixtures::two(), fixtures::two()},
      {"arrow*parallel/const", fixtures::two(), fixtures::parallel_pair(), fixtures::two()},
      {"terminal*arrow/const", fixtures::one(), fixtures::two(), fixtures::parallel_pair()},
      {"discrete*arrow/const", fixtures::discrete2(), fixtures::two(), fixtures::two()},
      {"arrow*discrete/iso-pair", fixtures::two(), fixtures::discrete2(), fixtures::iso_pair()},
  };
  for (auto& [name, ac, bc, val] : cases) {
    CatPtr a = ac, b2 = bc, v = val;
    std::string nm = name;
    out.push_back(
        {nm,
         [a, b2, v](Budget& budget) {
           TwoCatPtr sa = locally_discrete(a);
           TwoCatPtr sb = locally_discrete(b2);
           TwoCatPtr prodShape = product_2cat(sa, sb, budget);
           DiagPtr t = share(constant_diagram(prodShape, Variance::OpFirst, v, budget));
           EndResult whole = end_of(t, EndMode::Lax, budget);
           // over A first, then B
           DiagPtr curriedA = curry_product_diagram(t, sa, sb, true, budget);
           PartialEndResult pa = partial_end(curriedA, EndMode::Lax, budget);
           EndResult thenB =
               end_of(share(reinterpret_as_square(pa.diagram, sb, budget)), EndMode::Lax, budget);
           if (!iso_cats(whole.category, thenB.category, budget)) return false;
           // over B first, then A
           DiagPtr curriedB = curry_product_diagram(t, sb, sa, false, budget);
           PartialEndResult pb = partial_end(curriedB, EndMode::Lax, budget);
           EndResult thenA =
               end_of(share(reinterpret_as_square(pb.diagram, sa, budget)), EndMode::Lax, budget);
           if (!iso_cats(whole.category, thenA.category, budget)) return false;
           return iso_cats(thenB.category, thenA.category, budget);
         },
         [nm] { return "fubini instance " + nm; }});
  }
}

void laxlim_three_ways_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    if (!entry.shape->locallyDiscrete()) continue;
    for (const CorpusPair& cp : entry.covariantPairs) {
      DiagPtr f = cp.weight, g = cp.diagram;
      std::string name = entry.name + "/" + cp.name;
      out.push_back({name,
                     [f, g](Budget& b) {
                       WeightedLimitResult lim = lax_limit(f, g, EndMode::Lax, b);
                       LaxHomResult hom = lax_hom_category(f, g, TransMode::Lax, b);
                       if (!iso_cats(lim.category, hom.cat, b)) return false;
                       SharpResult sharp = sharp_of(f, b);
                       WeightedLimitResult viaSharp =
                           weighted_limit_strict(share(sharp.diagram), g, b);
                       if (!iso_cats(lim.category, viaSharp.category, b)) return false;
                       FlatResult flat = flat_of(g, EndMode::Lax, b);
                       WeightedLimitResult viaFlat =
                           weighted_limit_strict(f, share(flat.diagram), b);
                       return iso_cats(lim.category, viaFlat.category, b);
                     },
                     [name, f, g] { return pair_replay(name, f, g); }});
    }
  }
}

void slice_sharp_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    if (!entry.shape->locallyDiscrete()) continue;
    TwoCatPtr shape = entry.shape;
    std::string name = entry.name;
    out.push_back({name,
                   [shape](Budget& b) {
                     DiagPtr w = share(constant_diagram(shape, Variance::Covariant,
                                                        fixtures::one(), b));
                     SharpResult sharp = sharp_of(w, b);
                     for (int c = 0; c < shape->numObjects(); ++c) {
                       auto ls = lax_slice(shape, shape->objectId(c), b);
                       if (!iso_cats(sharp.diagram.onObjects[c], ls.category, b)) return false;
                     }
                     return true;
                   },
                   [name] { return "slice-sharp over " + name; }});
  }
  // the arrow-specific weight check: value at the arrow is 1 -> two picking 0
  out.push_back({"arrow-weight-detail",
                 [](Budget& b) {
                   TwoCatPtr shape = locally_discrete(fixtures::two());
                   DiagPtr w =
                       share(constant_diagram(shape, Variance::Covariant, fixtures::one(), b));
                   SharpResult sharp = sharp_of(w, b);
                   int o0 = shape->objIndexChecked("0");
                   int o1 = shape->objIndexChecked("1");
                   if (!iso_cats(sharp.diagram.onObjects[o0], fixtures::one(), b)) return false;
                   if (!iso_cats(sharp.diagram.onObjects[o1], fixtures::two(), b)) return false;
                   const Funct& act = sharp.diagram.onOne[shape->oneIndexChecked("a")];
                   // the image of the unique object must be the non-terminal
                   // object of the slice-like value
                   const FinCat& v1 = *sharp.diagram.onObjects[o1];
                   int img = act.objMap[0];
                   for (int z = 0; z < v1.numObjects(); ++z)
                     if (v1.hom(img, z).empty() && z != img) return false;
                   int terminalCount = 0;
                   for (int z = 0; z < v1.numObjects(); ++z) {
                     bool terminal = true;
                     for (int q = 0; q < v1.numObjects(); ++q)
                       if (v1.hom(q, z).size() != 1) terminal = false;
                     if (terminal) ++terminalCount;
                   }
                   return terminalCount == 1 && v1.hom(img, img).size() == 1;
                 },
                 [] { return std::string("slice-sharp arrow weight detail"); }});
}

void lend_as_wlim_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    if (!entry.shape->locallyDiscrete()) continue;
    if (entry.shape->numObjects() > 2) continue;  // weight blow-up guard
    TwoCatPtr shape = entry.shape;
    for (const CorpusDiagram& cd : entry.squares) {
      DiagPtr d = cd.diagram;
      std::string name = entry.name + "/" + cd.name;
      out.push_back({name,
                     [shape, d](Budget& b) {
                       DiagPtr weight = share(yoneda_sharp_weight(shape, b));
                       WeightedLimitResult lhs = weighted_limit_strict(weight, d, b);
                       EndResult rhs = end_of(d, EndMode::Lax, b);
                       return iso_cats(lhs.category, rhs.category, b);
                     },
                     [name, d] { return diagram_replay(name, d); }});
    }
  }
}

void adj_sharp_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    if (!entry.shape->locallyDiscrete()) continue;
    for (const CorpusPair& cp : entry.covariantPairs) {
      DiagPtr f = cp.weight, h = cp.diagram;
      std::string name = entry.name + "/" + cp.name;
      out.push_back({name,
                     [f, h](Budget& b) {
                       return check_adjunction(f, h, AdjunctionSide::Sharp, b).iso;
                     },
                     [name, f, h] { return pair_replay(name, f, h); }});
    }
  }
}

void adj_flat_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    for (const CorpusPair& cp : entry.covariantPairs) {
      DiagPtr h = cp.weight, f = cp.diagram;
      std::string name = entry.name + "/" + cp.name;
      out.push_back({name,
                     [f, h](Budget& b) {
                       return check_adjunction(f, h, AdjunctionSide::Flat, b).iso;
                     },
                     [name, f, h] { return pair_replay(name, f, h); }});
    }
  }
}

void oplax_arrow_slice_instances(const LawContext&, std::vector<Instance>& out) {
  std::vector<std::pair<std::string, CatPtr>> targets = {
      {"arrow", fixtures::two()},
      {"parallel-pair", fixtures::parallel_pair()},
      {"square-poset", fixtures::square_poset()},
      {"iso-pair", fixtures::iso_pair()}};
  for (auto& [tn, tc] : targets) {
    for (int obj = 0; obj < tc->numObjects(); ++obj) {
      CatPtr target = tc;
      std::string name = tn + "/" + tc->objectId(obj);
      int objIdx = obj;
      out.push_back({name,
                     [target, objIdx](Budget& b) {
                       TwoCatPtr shape = locally_discrete(fixtures::two());
                       DiagPtr weight = share(
                           constant_diagram(shape, Variance::Covariant, fixtures::one(), b));
                       DiagPtr diag = arrow_diagram(target, objIdx, b);
                       WeightedLimitResult r = lax_limit(weight, diag, EndMode::Oplax, b);
                       auto slice = slice_over(target, target->objectId(objIdx), b);
                       return iso_cats(r.category, slice.cat, b);
                     },
                     [name] { return "oplax arrow slice " + name; }});
    }
  }
}

void slice_product_pullback_instances(const LawContext&, std::vector<Instance>& out) {
  std::vector<std::pair<std::string, CatPtr>> targets = {
      {"square-poset", fixtures::square_poset()},
      {"arrow", fixtures::two()},
      {"iso-pair", fixtures::iso_pair()}};
  for (auto& [tn, tc] : targets) {
    for (int obj = 0; obj < tc->numObjects(); ++obj) {
      CatPtr target = tc;
      std::string name = tn + "/" + tc->objectId(obj);
      int objIdx = obj;
      out.push_back(
          {name,
           [target, objIdx](Budget& b) {
             auto slice = slice_over(target, target->objectId(objIdx), b);
             for (int x = 0; x < slice.cat->numObjects(); ++x)
               for (int y = 0; y < slice.cat->numObjects(); ++y) {
                 auto w = check_binary_product(*slice.cat, x, y);
                 if (!w) continue;
                 int xf = slice.objUnderlying[x];
                 int yf = slice.objUnderlying[y];
                 int p1 = slice.morUnderlying[w->proj1];
                 int p2 = slice.morUnderlying[w->proj2];
                 int apexObj = target->mor(slice.objUnderlying[w->apex]).src;
                 for (int z = 0; z < target->numObjects(); ++z)
                   for (int32_t zf : target->hom(z, target->mor(xf).src))
                     for (int32_t zg : target->hom(z, target->mor(yf).src)) {
                       if (target->compose(xf, zf) != target->compose(yf, zg)) continue;
                       int count = 0;
                       for (int32_t h : target->hom(z, apexObj))
                         if (target->compose(p1, h) == zf && target->compose(p2, h) == zg)
                           ++count;
                       if (count != 1) return false;
                     }
               }
             return true;
           },
           [name] { return "slice product pullback " + name; }});
    }
  }
}

void grothendieck_constant_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    if (!entry.shape->locallyDiscrete()) continue;
    TwoCatPtr shape = entry.shape;
    for (auto& [vn, vc] : std::vector<std::pair<std::string, CatPtr>>{
             {"arrow", fixtures::two()}, {"parallel-pair", fixtures::parallel_pair()}}) {
      CatPtr value = vc;
      std::string name = entry.name + "/" + vn;
      out.push_back({name,
                     [shape, value](Budget& b) {
                       DiagPtr g =
                           share(constant_diagram(shape, Variance::Covariant, value, b));
                       GrothendieckResult r = grothendieck(g, b);
                       CatPtr under = underlying_category(*shape);
                       auto p = product_cat(under, value, b);
                       return iso_cats(r.category, p.cat, b);
                     },
                     [name] { return "grothendieck constant " + name; }});
    }
  }
}

void yoneda_flat_instances(const LawContext&, std::vector<Instance>& out) {
  for (auto& [an, ac] :
       std::vector<std::pair<std::string, CatPtr>>{{"arrow", fixtures::two()},
                                                   {"square-poset", fixtures::square_poset()}}) {
    CatPtr a = ac;
    for (int obj = 0; obj < a->numObjects(); ++obj) {
      std::string rep = a->objectId(obj);
      for (int at = 0; at < a->numObjects(); ++at) {
        std::string name = an + "/hom(-," + rep + ")@" + a->objectId(at);
        std::string atId = a->objectId(at);
        CatPtr cat = a;
        std::string repId = rep;
        out.push_back({name,
                       [cat, repId, atId](Budget& b) {
                         DiagPtr f = share(representable_presheaf(cat, repId, b));
                         return yoneda_equivalence_check(f, atId, b).equivalent;
                       },
                       [name] { return "yoneda flat " + name; }});
      }
    }
  }
}

void oplax_duality_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    if (!entry.shape->locallyDiscrete()) continue;
    for (const CorpusDiagram& cd : entry.squares) {
      DiagPtr d = cd.diagram;
      std::string name = entry.name + "/" + cd.name;
      out.push_back({name,
                     [d](Budget& b) {
                       EndResult oplax = end_of(d, EndMode::Oplax, b);
                       DiagPtr swapped = share(swap_square_diagram(*d, b));
                       EndResult laxSwapped = end_of(swapped, EndMode::Lax, b);
                       return iso_cats(oplax.category, laxSwapped.category, b);
                     },
                     [name, d] { return diagram_replay(name, d); }});
    }
  }
}

// brute-force wedges with a given apex: all component/structure families
// satisfying the wedge laws
std::vector<LaxWedge> enumerate_wedges(const DiagPtr& t, EndMode mode, const CatPtr& apex,
                                       Budget& budget) {
  SquareView view(*t);
  const Fin2Cat& base = *t->base;
  std::vector<LaxWedge> out;
  std::vector<std::vector<Funct>> comps(base.numObjects());
  for (int o = 0; o < base.numObjects(); ++o)
    comps[o] = enumerate_functors(apex, view.value(o, o), budget);
  LaxWedge cur;
  cur.apex = apex;
  cur.components.resize(base.numObjects());
  cur.structure.resize(base.numOne());
  auto structRec = [&](auto&& self, int f) -> void {
    if (f == base.numOne()) {
      if (validate_wedge(t, mode, cur).ok()) out.push_back(cur);
      return;
    }
    const OneCell& fc = base.one(f);
    Funct cov = compose_funct(view.covAct(f), cur.components[fc.src]);
    Funct con = compose_funct(view.conAct(f), cur.components[fc.dst]);
    Funct& lhs = mode == EndMode::Oplax ? con : cov;
    Funct& rhs = mode == EndMode::Oplax ? cov : con;
    for (NatT& st : enumerate_natts(lhs, rhs, budget)) {
      budget.charge(1, "wedge enumeration");
      cur.structure[f] = std::move(st);
      self(self, f + 1);
    }
  };
  auto compRec = [&](auto&& self, int o) -> void {
    if (o == base.numObjects()) {
      structRec(structRec, 0);
      return;
    }
    for (const Funct& c : comps[o]) {
      budget.charge(1, "wedge enumeration");
      cur.components[o] = c;
      self(self, o + 1);
    }
  };
  compRec(compRec, 0);
  return out;
}

void universality_1d_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    if (entry.shape->numObjects() > 2) continue;  // keep the wedge search finite in practice
    for (const CorpusDiagram& cd : entry.squares) {
      DiagPtr d = cd.diagram;
      std::string name = entry.name + "/" + cd.name;
      out.push_back(
          {name,
           [d](Budget& b) {
             EndResult e = end_of(d, EndMode::Lax, b);
             for (CatPtr apex : {fixtures::one(), fixtures::two()}) {
               std::vector<LaxWedge> wedges = enumerate_wedges(d, EndMode::Lax, apex, b);
               auto intoEnd = enumerate_functors(apex, e.category, b);
               for (const LaxWedge& w : wedges) {
                 Funct u = factorize_wedge(e, w);
                 // recomposition
                 for (size_t o = 0; o < w.components.size(); ++o)
                   if (!(compose_funct(e.wedge.components[o], u) == w.components[o])) return false;
                 for (size_t f = 0; f < w.structure.size(); ++f)
                   if (!(whisker_right(e.wedge.structure[f], u) == w.structure[f])) return false;
                 // uniqueness by exhaustive search
                 int count = 0;
                 for (const Funct& cand : intoEnd) {
                   bool same = true;
                   for (size_t o = 0; o < w.components.size() && same; ++o)
                     same = compose_funct(e.wedge.components[o], cand) == w.components[o];
                   for (size_t f = 0; f < w.structure.size() && same; ++f)
                     same = whisker_right(e.wedge.structure[f], cand) == w.structure[f];
                   if (same) ++count;
                 }
                 if (count != 1) return false;
               }
             }
             return true;
           },
           [name, d] { return diagram_replay(name, d); }});
    }
  }
}

void universality_2d_instances(const LawContext& ctx, std::vector<Instance>& out) {
  for (const CorpusEntry& entry : ctx.corpus->entries) {
    if (entry.shape->numObjects() > 2) continue;
    for (const CorpusDiagram& cd : entry.squares) {
      DiagPtr d = cd.diagram;
      std::string name = entry.name + "/" + cd.name;
      out.push_back(
          {name,
           [d](Budget& b) {
             EndResult e = end_of(d, EndMode::Lax, b);
             const Fin2Cat& base = *d->base;
             for (CatPtr apex : {fixtures::one(), fixtures::two()}) {
               auto us = enumerate_functors(apex, e.category, b);
               for (const Funct& u : us)
                 for (const Funct& v : us) {
                   size_t direct = enumerate_natts(u, v, b).size();
                   std::vector<std::vector<NatT>> perObj(base.numObjects());
                   for (int o = 0; o < base.numObjects(); ++o)
                     perObj[o] = enumerate_natts(compose_funct(e.wedge.components[o], u),
                                                 compose_funct(e.wedge.components[o], v), b);
                   // count modification-shaped families that factor
                   size_t modCount = 0;
                   std::vector<NatT> gamma(base.numObjects());
                   auto rec = [&](auto&& self, int o) -> void {
                     if (o == base.numObjects()) {
                       try {
                         NatT beta = factorize_modification(e, u, v, gamma);
                         // reproduce the components
                         for (int oo = 0; oo < base.numObjects(); ++oo)
                           if (!(whisker_left(e.wedge.components[oo], beta) == gamma[oo])) return;
                         ++modCount;
                       } catch (const ContractError&) {
                       }
                       return;
                     }
                     for (const NatT& cand : perObj[o]) {
                       gamma[o] = cand;
                       self(self, o + 1);
                     }
                   };
                   rec(rec, 0);
                   if (modCount != direct) return false;
                 }
             }
             return true;
           },
           [name, d] { return diagram_replay(name, d); }});
    }
  }
}

struct LawSpec {
  std::string id;
  InstanceFn instances;
};

const std::vector<LawSpec>& registry() {
  static const std::vector<LawSpec> laws = {
      {"CONSTANT-END", constant_end_instances},
      {"DESCENT-AGREES", descent_agrees_instances},
      {"REPRESENTABLE-COMMUTE", representable_commute_instances},
      {"HOM-FORMULA", hom_formula_instances},
      {"FUBINI", fubini_instances},
      {"LAXLIM-THREE-WAYS", laxlim_three_ways_instances},
      {"SLICE-SHARP", slice_sharp_instances},
      {"ADJ-SHARP", adj_sharp_instances},
      {"ADJ-FLAT", adj_flat_instances},
      {"OPLAX-ARROW-SLICE", oplax_arrow_slice_instances},
      {"SLICE-PRODUCT-PULLBACK", slice_product_pullback_instances},
      {"GROTHENDIECK-CONSTANT", grothendieck_constant_instances},
      {"YONEDA-FLAT", yoneda_flat_instances},
      {"OPLAX-DUALITY", oplax_duality_instances},
      {"UNIVERSALITY-1D", universality_1d_instances},
      {"UNIVERSALITY-2D", universality_2d_instances},
      {"LEND-AS-WLIM", lend_as_wlim_instances},
  };
  return laws;
}

}  // namespace

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& l : registry()) v.push_back(l.id);
    return v;
  }();
  return ids;
}

std::vector<LawResult> run_laws(const Corpus& corpus, const std::vector<std::string>& filter,
                                long long perInstanceBudget) {
  LawContext ctx{&corpus, perInstanceBudget};
  std::vector<LawResult> results;
  for (const LawSpec& law : registry()) {
    if (!filter.empty() &&
        std::find(filter.begin(), filter.end(), law.id) == filter.end())
      continue;
    LawResult r;
    r.lawId = law.id;
    std::vector<Instance> instances;
    law.instances(ctx, instances);
    auto t0 = Clock::now();
    for (Instance& inst : instances) {
      Budget b(perInstanceBudget);
      try {
        bool ok = inst.check(b);
        ++r.instances;
        if (ok) {
          ++r.passes;
        } else {
          r.failures.push_back(inst.replay());
        }
      } catch (const BudgetExceeded&) {
        ++r.skipped;
      } catch (const ContractError& e) {
        ++r.instances;
        r.failures.push_back(inst.replay() + "\nerror: " + e.what());
      }
    }
    r.wallMs =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string law_table(const std::vector<LawResult>& results) {
  std::string out;
  char line[160];
  snprintf(line, sizeof(line), "%-24s %10s %8s %8s %8s %10s\n", "law", "instances", "passes",
           "fails", "skips", "wall(ms)");
  out += line;
  for (const LawResult& r : results) {
    snprintf(line, sizeof(line), "%-24s %10d %8d %8zu %8d %10lld\n", r.lawId.c_str(), r.instances,
             r.passes, r.failures.size(), r.skipped, r.wallMs);
    out += line;
  }
  return out;
}

}  // namespace lendkit
