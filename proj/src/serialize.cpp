#include "lendkit/serialize.hpp"

#include <set>

namespace lendkit {

namespace {

void reject_unknown_fields(const Json& j, const std::set<std::string>& allowed,
                           const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) throw InputError(path + ": unknown field '" + it.key() + "'");
  }
}

const Json& require_field(const Json& j, const char* name, const std::string& path) {
  auto it = j.find(name);
  if (it == j.end()) throw InputError(path + ": missing field '" + name + "'");
  return *it;
}

std::string require_string(const Json& j, const char* name, const std::string& path) {
  const Json& f = require_field(j, name, path);
  if (!f.is_string()) throw InputError(path + "." + name + ": expected a string");
  return f.get<std::string>();
}

Json funct_tables_json(const Funct& f) {
  Json fj;
  fj["objMap"] = Json::object();
  for (size_t o = 0; o < f.objMap.size(); ++o)
    fj["objMap"][f.dom->objectId(static_cast<int>(o))] = f.cod->objectId(f.objMap[o]);
  fj["morMap"] = Json::object();
  for (size_t m = 0; m < f.morMap.size(); ++m)
    fj["morMap"][f.dom->mor(static_cast<int>(m)).id] = f.cod->mor(f.morMap[m]).id;
  return fj;
}

Json wedge_json(const DiagPtr& diagram, const CatPtr& category, const LaxWedge& w,
                const std::string& modeName) {
  Json j;
  j["mode"] = modeName;
  j["diagram"] = diagram_to_json(*diagram);
  j["category"] = category_to_json(*category);
  const Fin2Cat& base = *diagram->base;
  j["components"] = Json::object();
  for (int o = 0; o < base.numObjects(); ++o)
    j["components"][base.objectId(o)] = funct_tables_json(w.components[o]);
  j["structure"] = Json::object();
  for (int f = 0; f < base.numOne(); ++f) {
    const NatT& st = w.structure[f];
    Json sj;
    sj["components"] = Json::object();
    for (size_t z = 0; z < st.comp.size(); ++z)
      sj["components"][st.src.dom->objectId(static_cast<int>(z))] =
          st.src.cod->mor(st.comp[z]).id;
    j["structure"][base.one(f).id] = std::move(sj);
  }
  return j;
}

}  // namespace

Json envelope_json(const std::string& kind, Json payload) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["kind"] = kind;
  j["payload"] = std::move(payload);
  return j;
}

DocumentEnvelope parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("syntax error: ") + e.what());
  }
  reject_unknown_fields(j, {"formatVersion", "kind", "payload"}, "$");
  DocumentEnvelope doc;
  doc.formatVersion = require_string(j, "formatVersion", "$");
  if (doc.formatVersion != kFormatVersion)
    throw InputError("$.formatVersion: unknown version '" + doc.formatVersion + "'");
  doc.kind = require_string(j, "kind", "$");
  static const std::set<std::string> kinds{"category", "twocategory", "functor", "diagram",
                                           "wedge",    "coherence",   "report"};
  if (!kinds.count(doc.kind)) throw InputError("$.kind: unknown kind '" + doc.kind + "'");
  doc.payload = require_field(j, "payload", "$");
  return doc;
}

std::string serialize_document(const DocumentEnvelope& doc) {
  Json j;
  j["formatVersion"] = doc.formatVersion;
  j["kind"] = doc.kind;
  j["payload"] = doc.payload;
  return j.dump(2) + "\n";
}

Json category_to_json(const FinCat& c) {
  Json j;
  j["objects"] = Json::array();
  for (const auto& o : c.objects()) j["objects"].push_back(o);
  j["morphisms"] = Json::array();
  for (const auto& m : c.mors()) {
    Json mj;
    mj["id"] = m.id;
    mj["src"] = c.objectId(m.src);
    mj["dst"] = c.objectId(m.dst);
    j["morphisms"].push_back(std::move(mj));
  }
  j["identities"] = Json::object();
  for (int o = 0; o < c.numObjects(); ++o)
    j["identities"][c.objectId(o)] = c.mor(c.identity(o)).id;
  j["compose"] = Json::array();
  for (int g = 0; g < c.numMors(); ++g)
    for (int f = 0; f < c.numMors(); ++f) {
      int gf = c.compose(g, f);
      if (gf >= 0) j["compose"].push_back(Json::array({c.mor(g).id, c.mor(f).id, c.mor(gf).id}));
    }
  return j;
}

CatPtr category_from_json(const Json& j, const std::string& path) {
  reject_unknown_fields(j, {"objects", "morphisms", "identities", "compose", "construction"}, path);
  FinCatBuilder b;
  const Json& objs = require_field(j, "objects", path);
  if (!objs.is_array()) throw InputError(path + ".objects: expected an array");
  for (const auto& o : objs) b.addObject(o.get<std::string>());
  const Json& mors = require_field(j, "morphisms", path);
  if (!mors.is_array()) throw InputError(path + ".morphisms: expected an array");
  for (size_t i = 0; i < mors.size(); ++i) {
    const std::string mp = path + ".morphisms[" + std::to_string(i) + "]";
    reject_unknown_fields(mors[i], {"id", "src", "dst"}, mp);
    b.addMor(require_string(mors[i], "id", mp), require_string(mors[i], "src", mp),
             require_string(mors[i], "dst", mp));
  }
  const Json& ids = require_field(j, "identities", path);
  if (!ids.is_object()) throw InputError(path + ".identities: expected an object");
  for (auto it = ids.begin(); it != ids.end(); ++it)
    b.setIdentity(it.key(), it.value().get<std::string>());
  const Json& comp = require_field(j, "compose", path);
  if (!comp.is_array()) throw InputError(path + ".compose: expected an array");
  for (size_t i = 0; i < comp.size(); ++i) {
    const Json& t = comp[i];
    if (!t.is_array() || t.size() != 3)
      throw InputError(path + ".compose[" + std::to_string(i) + "]: expected a [g,f,gf] triple");
    b.setCompose(t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>());
  }
  return b.buildShared();
}

Json twocat_to_json(const Fin2Cat& a) {
  Json j;
  j["objects"] = Json::array();
  for (const auto& o : a.objects()) j["objects"].push_back(o);
  j["oneCells"] = Json::array();
  for (int f = 0; f < a.numOne(); ++f) {
    Json c;
    c["id"] = a.one(f).id;
    c["src"] = a.objectId(a.one(f).src);
    c["dst"] = a.objectId(a.one(f).dst);
    j["oneCells"].push_back(std::move(c));
  }
  j["twoCells"] = Json::array();
  for (int t = 0; t < a.numTwo(); ++t) {
    Json c;
    c["id"] = a.two(t).id;
    c["src"] = a.one(a.two(t).src).id;
    c["dst"] = a.one(a.two(t).dst).id;
    j["twoCells"].push_back(std::move(c));
  }
  j["idOne"] = Json::object();
  for (int o = 0; o < a.numObjects(); ++o) j["idOne"][a.objectId(o)] = a.one(a.idOne(o)).id;
  j["idTwo"] = Json::object();
  for (int f = 0; f < a.numOne(); ++f) j["idTwo"][a.one(f).id] = a.two(a.idTwo(f)).id;
  j["composeOne"] = Json::array();
  for (int g = 0; g < a.numOne(); ++g)
    for (int f = 0; f < a.numOne(); ++f) {
      int gf = a.composeOne(g, f);
      if (gf >= 0)
        j["composeOne"].push_back(Json::array({a.one(g).id, a.one(f).id, a.one(gf).id}));
    }
  j["vcomp"] = Json::array();
  j["hcomp"] = Json::array();
  for (int s = 0; s < a.numTwo(); ++s)
    for (int t = 0; t < a.numTwo(); ++t) {
      int v = a.vcomp(s, t);
      if (v >= 0) j["vcomp"].push_back(Json::array({a.two(s).id, a.two(t).id, a.two(v).id}));
      int h = a.hcomp(s, t);
      if (h >= 0) j["hcomp"].push_back(Json::array({a.two(s).id, a.two(t).id, a.two(h).id}));
    }
  return j;
}

TwoCatPtr twocat_from_json(const Json& j, const std::string& path) {
  reject_unknown_fields(
      j, {"objects", "oneCells", "twoCells", "idOne", "idTwo", "composeOne", "vcomp", "hcomp"},
      path);
  Fin2CatBuilder b;
  for (const auto& o : require_field(j, "objects", path)) b.addObject(o.get<std::string>());
  const Json& ones = require_field(j, "oneCells", path);
  for (size_t i = 0; i < ones.size(); ++i) {
    const std::string mp = path + ".oneCells[" + std::to_string(i) + "]";
    reject_unknown_fields(ones[i], {"id", "src", "dst"}, mp);
    b.addOne(require_string(ones[i], "id", mp), require_string(ones[i], "src", mp),
             require_string(ones[i], "dst", mp));
  }
  const Json& twos = require_field(j, "twoCells", path);
  for (size_t i = 0; i < twos.size(); ++i) {
    const std::string mp = path + ".twoCells[" + std::to_string(i) + "]";
    reject_unknown_fields(twos[i], {"id", "src", "dst"}, mp);
    b.addTwo(require_string(twos[i], "id", mp), require_string(twos[i], "src", mp),
             require_string(twos[i], "dst", mp));
  }
  const Json& idOne = require_field(j, "idOne", path);
  for (auto it = idOne.begin(); it != idOne.end(); ++it)
    b.setIdOne(it.key(), it.value().get<std::string>());
  const Json& idTwo = require_field(j, "idTwo", path);
  for (auto it = idTwo.begin(); it != idTwo.end(); ++it)
    b.setIdTwo(it.key(), it.value().get<std::string>());
  auto fill = [&](const char* name, auto&& setter) {
    const Json& arr = require_field(j, name, path);
    for (size_t i = 0; i < arr.size(); ++i) {
      const Json& t = arr[i];
      if (!t.is_array() || t.size() != 3)
        throw InputError(path + "." + name + "[" + std::to_string(i) + "]: expected a triple");
      setter(t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>());
    }
  };
  fill("composeOne", [&](auto g, auto f, auto gf) { b.setComposeOne(g, f, gf); });
  fill("vcomp", [&](auto g, auto f, auto gf) { b.setVcomp(g, f, gf); });
  fill("hcomp", [&](auto g, auto f, auto gf) { b.setHcomp(g, f, gf); });
  return b.buildShared();
}

Json funct_to_json(const Funct& f) {
  Json j;
  j["domain"] = category_to_json(*f.dom);
  j["codomain"] = category_to_json(*f.cod);
  Json tables = funct_tables_json(f);
  j["objMap"] = tables["objMap"];
  j["morMap"] = tables["morMap"];
  return j;
}

Funct funct_from_json(const Json& j, const std::string& path) {
  reject_unknown_fields(j, {"domain", "codomain", "objMap", "morMap"}, path);
  Funct f;
  f.dom = category_from_json(require_field(j, "domain", path), path + ".domain");
  f.cod = category_from_json(require_field(j, "codomain", path), path + ".codomain");
  f.objMap.assign(f.dom->numObjects(), -1);
  f.morMap.assign(f.dom->numMors(), -1);
  const Json& om = require_field(j, "objMap", path);
  for (auto it = om.begin(); it != om.end(); ++it)
    f.objMap[f.dom->objIndexChecked(it.key())] =
        f.cod->objIndexChecked(it.value().get<std::string>());
  const Json& mm = require_field(j, "morMap", path);
  for (auto it = mm.begin(); it != mm.end(); ++it)
    f.morMap[f.dom->morIndexChecked(it.key())] =
        f.cod->morIndexChecked(it.value().get<std::string>());
  for (size_t o = 0; o < f.objMap.size(); ++o)
    if (f.objMap[o] < 0)
      throw InputError(path + ".objMap: missing entry for object " +
                       f.dom->objectId(static_cast<int>(o)));
  for (size_t m = 0; m < f.morMap.size(); ++m)
    if (f.morMap[m] < 0)
      throw InputError(path + ".morMap: missing entry for morphism " +
                       f.dom->mor(static_cast<int>(m)).id);
  return f;
}

Json diagram_to_json(const TwoFunctorToCat& t) {
  Json j;
  j["variance"] = variance_name(t.variance);
  j["shape"] = twocat_to_json(*t.base);
  if (t.extra) j["extra"] = twocat_to_json(*t.extra);
  const Fin2Cat& s = *t.shape;
  j["onObjects"] = Json::object();
  for (int o = 0; o < s.numObjects(); ++o)
    j["onObjects"][s.objectId(o)] = category_to_json(*t.onObjects[o]);
  j["onOneCells"] = Json::object();
  for (int f = 0; f < s.numOne(); ++f)
    j["onOneCells"][s.one(f).id] = funct_tables_json(t.onOne[f]);
  j["onTwoCells"] = Json::object();
  for (int u = 0; u < s.numTwo(); ++u) {
    const NatT& nt = t.onTwo[u];
    Json nj;
    nj["components"] = Json::object();
    for (size_t o = 0; o < nt.comp.size(); ++o)
      nj["components"][nt.src.dom->objectId(static_cast<int>(o))] =
          nt.src.cod->mor(nt.comp[o]).id;
    j["onTwoCells"][s.two(u).id] = std::move(nj);
  }
  return j;
}

TwoFunctorToCat diagram_from_json(const Json& j, const std::string& path,
                                  const TwoCatPtr& externalShape, const TwoCatPtr& externalExtra,
                                  Budget& budget) {
  reject_unknown_fields(j, {"variance", "shape", "extra", "onObjects", "onOneCells", "onTwoCells"},
                        path);
  TwoFunctorToCat t;
  t.variance = variance_from_name(require_string(j, "variance", path));
  const Json& shapeField = require_field(j, "shape", path);
  if (shapeField.is_string()) {
    if (shapeField.get<std::string>() != "external")
      throw InputError(path + ".shape: expected an inline 2-category or \"external\"");
    if (!externalShape) throw InputError(path + ".shape: external shape not provided");
    t.base = externalShape;
  } else {
    t.base = twocat_from_json(shapeField, path + ".shape");
  }
  if (j.count("extra")) {
    const Json& extraField = j["extra"];
    if (extraField.is_string()) {
      if (extraField.get<std::string>() != "external")
        throw InputError(path + ".extra: expected an inline 2-category or \"external\"");
      if (!externalExtra) throw InputError(path + ".extra: external extra shape not provided");
      t.extra = externalExtra;
    } else {
      t.extra = twocat_from_json(extraField, path + ".extra");
    }
  }
  switch (t.variance) {
    case Variance::Covariant: t.shape = t.base; break;
    case Variance::OpFirst: t.shape = square_shape(t.base, budget); break;
    case Variance::OpFirstExtra:
      if (!t.extra) throw InputError(path + ": op-first-extra requires an extra shape");
      t.shape = triple_shape(t.base, t.extra, budget);
      break;
  }
  const Fin2Cat& s = *t.shape;
  t.onObjects.resize(s.numObjects());
  const Json& onObjs = require_field(j, "onObjects", path);
  for (auto it = onObjs.begin(); it != onObjs.end(); ++it) {
    int o = s.objIndex(it.key());
    if (o < 0) throw InputError(path + ".onObjects: unknown shape object '" + it.key() + "'");
    t.onObjects[o] = category_from_json(it.value(), path + ".onObjects." + it.key());
  }
  for (int o = 0; o < s.numObjects(); ++o)
    if (!t.onObjects[o])
      throw InputError(path + ".onObjects: missing entry for shape object " + s.objectId(o));

  t.onOne.resize(s.numOne());
  const Json& onOnes = require_field(j, "onOneCells", path);
  for (auto it = onOnes.begin(); it != onOnes.end(); ++it) {
    int f = s.oneIndex(it.key());
    if (f < 0) throw InputError(path + ".onOneCells: unknown shape 1-cell '" + it.key() + "'");
    const std::string mp = path + ".onOneCells." + it.key();
    reject_unknown_fields(it.value(), {"objMap", "morMap"}, mp);
    Funct ff;
    ff.dom = t.onObjects[s.one(f).src];
    ff.cod = t.onObjects[s.one(f).dst];
    ff.objMap.assign(ff.dom->numObjects(), -1);
    ff.morMap.assign(ff.dom->numMors(), -1);
    const Json& om = require_field(it.value(), "objMap", mp);
    for (auto e = om.begin(); e != om.end(); ++e)
      ff.objMap[ff.dom->objIndexChecked(e.key())] =
          ff.cod->objIndexChecked(e.value().get<std::string>());
    const Json& mm = require_field(it.value(), "morMap", mp);
    for (auto e = mm.begin(); e != mm.end(); ++e)
      ff.morMap[ff.dom->morIndexChecked(e.key())] =
          ff.cod->morIndexChecked(e.value().get<std::string>());
    for (size_t o = 0; o < ff.objMap.size(); ++o)
      if (ff.objMap[o] < 0)
        throw InputError(mp + ".objMap: missing entry for " +
                         ff.dom->objectId(static_cast<int>(o)));
    for (size_t m = 0; m < ff.morMap.size(); ++m)
      if (ff.morMap[m] < 0)
        throw InputError(mp + ".morMap: missing entry for " + ff.dom->mor(static_cast<int>(m)).id);
    t.onOne[f] = std::move(ff);
  }
  for (int f = 0; f < s.numOne(); ++f)
    if (!t.onOne[f].dom) {
      if (s.isIdentityOne(f))
        t.onOne[f] = identity_funct(t.onObjects[s.one(f).src]);
      else
        throw InputError(path + ".onOneCells: missing entry for 1-cell " + s.one(f).id);
    }

  t.onTwo.resize(s.numTwo());
  const Json& onTwos = require_field(j, "onTwoCells", path);
  for (auto it = onTwos.begin(); it != onTwos.end(); ++it) {
    int u = s.twoIndex(it.key());
    if (u < 0) throw InputError(path + ".onTwoCells: unknown shape 2-cell '" + it.key() + "'");
    const std::string mp = path + ".onTwoCells." + it.key();
    reject_unknown_fields(it.value(), {"components"}, mp);
    NatT nt;
    nt.src = t.onOne[s.two(u).src];
    nt.dst = t.onOne[s.two(u).dst];
    nt.comp.assign(nt.src.dom->numObjects(), -1);
    const Json& comps = require_field(it.value(), "components", mp);
    for (auto e = comps.begin(); e != comps.end(); ++e)
      nt.comp[nt.src.dom->objIndexChecked(e.key())] =
          nt.src.cod->morIndexChecked(e.value().get<std::string>());
    for (size_t o = 0; o < nt.comp.size(); ++o)
      if (nt.comp[o] < 0)
        throw InputError(mp + ".components: missing entry for " +
                         nt.src.dom->objectId(static_cast<int>(o)));
    t.onTwo[u] = std::move(nt);
  }
  for (int u = 0; u < s.numTwo(); ++u)
    if (!t.onTwo[u].src.dom) {
      if (s.isIdentityTwo(u))
        t.onTwo[u] = identity_natt(t.onOne[s.two(u).src]);
      else
        throw InputError(path + ".onTwoCells: missing entry for 2-cell " + s.two(u).id);
    }
  return t;
}

Json end_result_to_json(const EndResult& e) {
  return wedge_json(e.diagram, e.category, e.wedge, end_mode_name(e.mode));
}

Json descent_end_to_json(const DescentEnd& e) {
  return wedge_json(e.diagram, e.category, e.wedge, "lax");
}

Json coherence_to_json(const CoherenceData& cd) {
  Json j;
  j["x1"] = category_to_json(*cd.x1);
  j["x2"] = category_to_json(*cd.x2);
  j["x3"] = category_to_json(*cd.x3);
  j["v"] = funct_tables_json(cd.v);
  j["w"] = funct_tables_json(cd.w);
  j["i"] = funct_tables_json(cd.i);
  j["r"] = funct_tables_json(cd.r);
  j["s"] = funct_tables_json(cd.s);
  j["t"] = funct_tables_json(cd.t);
  return j;
}

CoherenceData coherence_from_json(const Json& j, const std::string& path) {
  reject_unknown_fields(j, {"x1", "x2", "x3", "v", "w", "i", "r", "s", "t"}, path);
  CoherenceData cd;
  cd.x1 = category_from_json(require_field(j, "x1", path), path + ".x1");
  cd.x2 = category_from_json(require_field(j, "x2", path), path + ".x2");
  cd.x3 = category_from_json(require_field(j, "x3", path), path + ".x3");
  auto fun = [&](const char* name, const CatPtr& dom, const CatPtr& cod) {
    const Json& fj = require_field(j, name, path);
    const std::string mp = path + "." + name;
    reject_unknown_fields(fj, {"objMap", "morMap"}, mp);
    Funct f;
    f.dom = dom;
    f.cod = cod;
    f.objMap.assign(dom->numObjects(), -1);
    f.morMap.assign(dom->numMors(), -1);
    const Json& om = require_field(fj, "objMap", mp);
    for (auto it = om.begin(); it != om.end(); ++it)
      f.objMap[dom->objIndexChecked(it.key())] =
          cod->objIndexChecked(it.value().get<std::string>());
    const Json& mm = require_field(fj, "morMap", mp);
    for (auto it = mm.begin(); it != mm.end(); ++it)
      f.morMap[dom->morIndexChecked(it.key())] =
          cod->morIndexChecked(it.value().get<std::string>());
    for (size_t o = 0; o < f.objMap.size(); ++o)
      if (f.objMap[o] < 0) throw InputError(mp + ".objMap: missing entry");
    for (size_t m = 0; m < f.morMap.size(); ++m)
      if (f.morMap[m] < 0) throw InputError(mp + ".morMap: missing entry");
    return f;
  };
  cd.v = fun("v", cd.x1, cd.x2);
  cd.w = fun("w", cd.x1, cd.x2);
  cd.i = fun("i", cd.x2, cd.x1);
  cd.r = fun("r", cd.x2, cd.x3);
  cd.s = fun("s", cd.x2, cd.x3);
  cd.t = fun("t", cd.x2, cd.x3);
  return cd;
}

std::string export_dot(const FinCat& c) {
  std::string out = "digraph category {\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    q += '"';
    return q;
  };
  for (const auto& o : c.objects()) out += "  " + quote(o) + ";\n";
  for (int m = 0; m < c.numMors(); ++m) {
    if (c.isIdentity(m)) continue;
    const Mor& mm = c.mor(m);
    out += "  " + quote(c.objectId(mm.src)) + " -> " + quote(c.objectId(mm.dst)) +
           " [label=" + quote(mm.id) + "];\n";
  }
  out += "}\n";
  return out;
}

ValidationReport validate_document(const DocumentEnvelope& doc, Budget& budget) {
  if (doc.kind == "category") {
    CatPtr c = category_from_json(doc.payload, "$.payload");
    return validate_fin_cat(*c);
  }
  if (doc.kind == "twocategory") {
    TwoCatPtr a = twocat_from_json(doc.payload, "$.payload");
    return validate_fin_2cat(*a);
  }
  if (doc.kind == "functor") {
    Funct f = funct_from_json(doc.payload, "$.payload");
    ValidationReport rep = validate_fin_cat(*f.dom);
    for (auto& p : validate_fin_cat(*f.cod).problems) rep.add("codomain: " + p);
    if (!rep.ok()) return rep;
    return validate_funct(f);
  }
  if (doc.kind == "diagram") {
    TwoFunctorToCat t = diagram_from_json(doc.payload, "$.payload", nullptr, nullptr, budget);
    ValidationReport rep = validate_fin_2cat(*t.base);
    if (!rep.ok()) return rep;
    for (const auto& v : t.onObjects)
      for (auto& p : validate_fin_cat(*v).problems) rep.add(p);
    if (!rep.ok()) return rep;
    return validate_2functor(t);
  }
  if (doc.kind == "coherence") {
    CoherenceData cd = coherence_from_json(doc.payload, "$.payload");
    return validate_coherence(cd);
  }
  if (doc.kind == "wedge") {
    reject_unknown_fields(doc.payload, {"mode", "diagram", "category", "components", "structure"},
                          "$.payload");
    EndMode mode = end_mode_from_name(require_string(doc.payload, "mode", "$.payload"));
    TwoFunctorToCat td = diagram_from_json(require_field(doc.payload, "diagram", "$.payload"),
                                           "$.payload.diagram", nullptr, nullptr, budget);
    DiagPtr tp = share(std::move(td));
    CatPtr apex = category_from_json(require_field(doc.payload, "category", "$.payload"),
                                     "$.payload.category");
    const Fin2Cat& base = *tp->base;
    LaxWedge w;
    w.apex = apex;
    w.components.resize(base.numObjects());
    w.structure.resize(base.numOne());
    SquareView view(*tp);
    const Json& comps = require_field(doc.payload, "components", "$.payload");
    for (int o = 0; o < base.numObjects(); ++o) {
      auto it = comps.find(base.objectId(o));
      if (it == comps.end())
        throw InputError("$.payload.components: missing entry for " + base.objectId(o));
      const std::string mp = "$.payload.components." + base.objectId(o);
      reject_unknown_fields(*it, {"objMap", "morMap"}, mp);
      Funct c;
      c.dom = apex;
      c.cod = view.value(o, o);
      c.objMap.assign(apex->numObjects(), -1);
      c.morMap.assign(apex->numMors(), -1);
      const Json& om = require_field(*it, "objMap", mp);
      for (auto e = om.begin(); e != om.end(); ++e)
        c.objMap[apex->objIndexChecked(e.key())] =
            c.cod->objIndexChecked(e.value().get<std::string>());
      const Json& mm = require_field(*it, "morMap", mp);
      for (auto e = mm.begin(); e != mm.end(); ++e)
        c.morMap[apex->morIndexChecked(e.key())] =
            c.cod->morIndexChecked(e.value().get<std::string>());
      w.components[o] = std::move(c);
    }
    const Json& sts = require_field(doc.payload, "structure", "$.payload");
    for (int f = 0; f < base.numOne(); ++f) {
      auto it = sts.find(base.one(f).id);
      if (it == sts.end())
        throw InputError("$.payload.structure: missing entry for " + base.one(f).id);
      const std::string mp = "$.payload.structure." + base.one(f).id;
      reject_unknown_fields(*it, {"components"}, mp);
      const OneCell& fc = base.one(f);
      NatT st;
      Funct cov = compose_funct(view.covAct(f), w.components[fc.src]);
      Funct con = compose_funct(view.conAct(f), w.components[fc.dst]);
      st.src = mode == EndMode::Oplax ? con : cov;
      st.dst = mode == EndMode::Oplax ? cov : con;
      st.comp.assign(apex->numObjects(), -1);
      const Json& cs = require_field(*it, "components", mp);
      for (auto e = cs.begin(); e != cs.end(); ++e)
        st.comp[apex->objIndexChecked(e.key())] =
            st.src.cod->morIndexChecked(e.value().get<std::string>());
      w.structure[f] = std::move(st);
    }
    return validate_wedge(tp, mode, w);
  }
  // report documents carry results, not laws to check
  return ValidationReport{};
}

}  // namespace lendkit
