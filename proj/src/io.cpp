#include "warp/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <map>
#include <set>

namespace warp {

namespace {

std::string loc(const std::string& at) { return at.empty() ? "/" : at; }

std::string child(const std::string& at, const std::string& key) {
  std::string k;
  for (char ch : key) {
    if (ch == '~') k += "~0";
    else if (ch == '/') k += "~1";
    else k += ch;
  }
  return at + "/" + k;
}

std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

void need_object(const Json& j, const std::string& at) {
  if (!j.is_object()) throw SchemaError(loc(at), "expected an object");
}

void need_array(const Json& j, const std::string& at) {
  if (!j.is_array()) throw SchemaError(loc(at), "expected a list");
}

const Json& field(const Json& j, const std::string& key, const std::string& at) {
  need_object(j, at);
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(loc(at), "missing field '" + key + "'");
  return *it;
}

// Rejects fields outside `allowed` ("kind" is always allowed).
void only_fields(const Json& j, std::initializer_list<const char*> allowed, const std::string& at) {
  need_object(j, at);
  for (const auto& [k, v] : j.items()) {
    if (k == "kind") continue;
    bool ok = false;
    for (auto a : allowed) ok = ok || k == a;
    if (!ok) throw SchemaError(child(at, k), "unknown field");
  }
}

Atom atom(const Json& j, const std::string& at) {
  if (!j.is_string()) throw SchemaError(loc(at), "expected a string");
  return j.get<std::string>();
}

FinSet atom_set(const Json& j, const std::string& at) {
  need_array(j, at);
  std::vector<Atom> atoms;
  std::set<Atom> seen;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto a = atom(j[i], child(at, i));
    if (!seen.insert(a).second) throw SchemaError(child(at, i), "duplicate element '" + a + "'");
    atoms.push_back(a);
  }
  return FinSet(std::move(atoms));
}

std::size_t element(const FinSet& s, const Json& j, const std::string& at, const char* what) {
  auto a = atom(j, at);
  auto i = s.find(a);
  if (!i) throw SchemaError(loc(at), std::string("unknown ") + what + " '" + a + "'");
  return *i;
}

// Fixed-length row of strings.
const Json& row(const Json& j, std::size_t len, const std::string& at) {
  need_array(j, at);
  if (j.size() != len) throw SchemaError(loc(at), "expected " + std::to_string(len) + " entries");
  return j;
}

Json strings(const std::vector<Atom>& atoms) {
  Json out = Json::array();
  for (const auto& a : atoms) out.push_back(a);
  return out;
}

Json sorted_rows(std::vector<std::vector<Atom>> rows) {
  std::sort(rows.begin(), rows.end());
  Json out = Json::array();
  for (auto& r : rows) out.push_back(strings(r));
  return out;
}

Json nested(Json doc) {
  doc.erase("kind");
  return doc;
}

Json document(const char* kind, Json payload) {
  payload["kind"] = kind;
  return payload;
}

// ---- arrows by name inside one category

std::map<Atom, std::size_t> arrow_names(const FinCategory& c, const std::string& at) {
  std::map<Atom, std::size_t> out;
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    if (!out.emplace(c.arrow_name(a), a).second)
      throw SchemaError(loc(at), "arrow name '" + c.arrow_name(a) + "' is used twice in one hom-category");
  return out;
}

std::size_t named_arrow(const FinCategory& c, const Json& j, const std::string& at) {
  auto name = atom(j, at);
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    if (c.arrow_name(a) == name) return a;
  throw SchemaError(loc(at), "unknown arrow '" + name + "'");
}

void unique_arrow_names(const FinCategory& c, const std::string& what) {
  std::set<Atom> seen;
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    if (!seen.insert(c.arrow_name(a)).second)
      throw StructureError(what + ": arrow name '" + c.arrow_name(a) + "' is used twice");
}

// ---- spans and cells

Json span_to_json(const Span& s) {
  if (s.arity() == 0) return "identity";
  if (s.arity() != 1) throw StructureError("only generator spans can be written");
  Json out = Json::object();
  for (std::size_t x = 0; x < s.src().size(); ++x) {
    Json& rowj = out[s.src()[x]];
    rowj = Json::object();
    for (std::size_t y = 0; y < s.dst().size(); ++y) {
      std::vector<Atom> atoms;
      for (const auto& p : s.entry(x, y)) atoms.push_back(p.entry(0));
      rowj[s.dst()[y]] = strings(atoms);
    }
  }
  return out;
}

SpanPtr span_from_json(const Json& j, const FinSet& src, const FinSet& dst, const std::string& at) {
  if (j.is_string() && j.get<std::string>() == "identity") {
    if (!(src == dst)) throw SchemaError(loc(at), "an identity span needs equal ends");
    return identity_span(src);
  }
  need_object(j, at);
  std::map<std::pair<Atom, Atom>, std::vector<Atom>> atoms;
  for (const auto& [x, rowj] : j.items()) {
    if (!src.contains(x)) throw SchemaError(child(at, x), "unknown object '" + x + "'");
    need_object(rowj, child(at, x));
    for (const auto& [y, entry] : rowj.items()) {
      if (!dst.contains(y)) throw SchemaError(child(child(at, x), y), "unknown object '" + y + "'");
      atoms[{x, y}] = atom_set(entry, child(child(at, x), y)).atoms();
    }
  }
  return generator_span(src, dst, atoms);
}

Json cell_to_json(const Cell2& c) {
  std::vector<std::pair<std::vector<Atom>, std::vector<Atom>>> pairs;
  for (const auto& entry : c.dom().entries())
    for (const auto& p : entry) pairs.emplace_back(p.atoms(), c(p).atoms());
  std::sort(pairs.begin(), pairs.end());
  Json out = Json::array();
  for (const auto& [d, e] : pairs) out.push_back(Json::array({strings(d), strings(e)}));
  return out;
}

Path path_from_json(const Json& j, const std::string& at) {
  need_array(j, at);
  if (j.empty() || j.size() % 2 == 0) throw SchemaError(loc(at), "a path has an odd number of atoms");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < j.size(); ++i) atoms.push_back(atom(j[i], child(at, i)));
  return Path(std::move(atoms));
}

Cell2 cell_from_json(const Json& j, const SpanPtr& dom, const SpanPtr& cod, const std::string& at) {
  need_array(j, at);
  std::map<Path, Path> images;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& r = row(j[i], 2, child(at, i));
    auto from = path_from_json(r[0], child(child(at, i), 0));
    auto to = path_from_json(r[1], child(child(at, i), 1));
    if (!dom->find(from)) throw SchemaError(child(child(at, i), 0), "path " + from.str() + " is not in the domain");
    if (!cod->find(to)) throw SchemaError(child(child(at, i), 1), "path " + to.str() + " is not in the codomain");
    if (!images.emplace(from, to).second) throw SchemaError(child(at, i), "path " + from.str() + " mapped twice");
  }
  try {
    return Cell2::from_function(dom, cod, [&](const Path& p) {
      auto it = images.find(p);
      if (it == images.end()) throw SchemaError(loc(at), "no image for path " + p.str());
      return it->second;
    });
  } catch (const SchemaError&) {
    throw;
  } catch (const StructureError& e) {
    throw SchemaError(loc(at), e.what());
  }
}

// ---- functors between hom-categories, by names

Json functor_to_json(const FinFunctor& f) {
  Json objs = Json::object(), arrows = Json::object();
  for (std::size_t o = 0; o < f.dom().object_count(); ++o) objs[f.dom().objects()[o]] = f.cod().objects()[f.object(o)];
  for (std::size_t a = 0; a < f.dom().arrow_count(); ++a) arrows[f.dom().arrow_name(a)] = f.cod().arrow_name(f.arrow(a));
  return Json{{"objects", objs}, {"arrows", arrows}};
}

FinFunctor functor_from_json(const Json& j, const CategoryPtr& dom, const CategoryPtr& cod, const std::string& at) {
  only_fields(j, {"objects", "arrows"}, at);
  const auto& objs = field(j, "objects", at);
  const auto& arrows = field(j, "arrows", at);
  need_object(objs, child(at, "objects"));
  need_object(arrows, child(at, "arrows"));
  std::vector<std::size_t> om, am;
  for (std::size_t o = 0; o < dom->object_count(); ++o) {
    const auto& name = dom->objects()[o];
    auto it = objs.find(name);
    if (it == objs.end()) throw SchemaError(child(at, "objects"), "no image for '" + name + "'");
    om.push_back(element(cod->objects(), *it, child(child(at, "objects"), name), "object"));
  }
  arrow_names(*dom, at);
  for (std::size_t a = 0; a < dom->arrow_count(); ++a) {
    const auto& name = dom->arrow_name(a);
    auto it = arrows.find(name);
    if (it == arrows.end()) throw SchemaError(child(at, "arrows"), "no image for '" + name + "'");
    am.push_back(named_arrow(*cod, *it, child(child(at, "arrows"), name)));
  }
  if (objs.size() != om.size() || arrows.size() != am.size())
    throw SchemaError(loc(at), "images given for unknown cells");
  return FinFunctor(dom, cod, std::move(om), std::move(am));
}

Json object_map_to_json(const FinFunction& f) {
  Json out = Json::object();
  for (std::size_t x = 0; x < f.dom().size(); ++x) out[f.dom()[x]] = f.cod()[f(x)];
  return out;
}

FinFunction object_map_from_json(const Json& j, const FinSet& objects, const std::string& at) {
  need_object(j, at);
  std::vector<std::size_t> images;
  for (const auto& x : objects) {
    auto it = j.find(x);
    if (it == j.end()) throw SchemaError(loc(at), "no image for '" + x + "'");
    images.push_back(element(objects, *it, child(at, x), "object"));
  }
  if (j.size() != objects.size()) throw SchemaError(loc(at), "images given for unknown objects");
  return FinFunction(objects, objects, std::move(images));
}

// Per-object table {x: value}.
template <class F>
Json per_object(const FinSet& objects, F&& value) {
  Json out = Json::object();
  for (std::size_t x = 0; x < objects.size(); ++x) out[objects[x]] = value(x);
  return out;
}

template <class F>
void read_per_object(const Json& j, const FinSet& objects, const std::string& at, F&& read) {
  need_object(j, at);
  for (std::size_t x = 0; x < objects.size(); ++x) {
    auto it = j.find(objects[x]);
    if (it == j.end()) throw SchemaError(loc(at), "missing entry for '" + objects[x] + "'");
    read(x, *it, child(at, objects[x]));
  }
  if (j.size() != objects.size()) throw SchemaError(loc(at), "entries given for unknown objects");
}

CategoryPtr lawful_category(const Json& j, const std::string& at) {
  auto c = std::make_shared<const FinCategory>(category_from_json(j, at));
  auto r = validate_category(*c);
  if (!r.valid()) throw LawViolation("base at " + loc(at) + " is not a category", r);
  return c;
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::category: return "category";
    case Kind::monad: return "monad";
    case Kind::warping: return "warping";
    case Kind::mw_monad: return "mw_monad";
    case Kind::wreath: return "wreath";
    case Kind::algebra: return "algebra";
    case Kind::skew_bicategory: return "skew_bicategory";
    case Kind::skew_warping: return "skew_warping";
    case Kind::skew_algebra: return "skew_algebra";
  }
  return "?";
}

Kind kind_of(const Json& doc) {
  auto tag = atom(field(doc, "kind", ""), "/kind");
  for (Kind k : {Kind::category, Kind::monad, Kind::warping, Kind::mw_monad, Kind::wreath, Kind::algebra,
                 Kind::skew_bicategory, Kind::skew_warping, Kind::skew_algebra})
    if (tag == kind_name(k)) return k;
  throw SchemaError("/kind", "unknown kind '" + tag + "'");
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError("line " + std::to_string(line) + ", column " + std::to_string(col), "not valid JSON");
  }
}

namespace {

bool has_object(const Json& j) {
  if (j.is_object()) return true;
  if (j.is_array())
    for (const auto& e : j)
      if (has_object(e)) return true;
  return false;
}

std::string inline_list(const Json& j) {
  if (!j.is_array()) return j.dump();
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_list(j[i]);
  return out + "]";
}

// Two-space indentation, but lists without objects stay on one line when
// they fit.
void write(const Json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(k).dump() + ": ";
      write(v, out, indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + "}";
    return;
  }
  if (j.is_array() && !j.empty()) {
    if (!has_object(j)) {
      std::string line = inline_list(j);
      if (line.size() + indent <= 100) {
        out += line;
        return;
      }
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write(j[i], out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string emit(const Json& doc) {
  std::string out;
  write(doc, out, 0);
  return out + "\n";
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---- categories and monads

Json to_json(const FinCategory& c) {
  const auto& obj = c.objects();
  const std::size_t n = obj.size();
  Json homs = Json::object(), ids = Json::object();
  std::vector<std::vector<Atom>> comp;
  for (std::size_t x = 0; x < n; ++x) {
    homs[obj[x]] = Json::object();
    for (std::size_t y = 0; y < n; ++y) homs[obj[x]][obj[y]] = strings(c.hom(x, y).atoms());
    ids[obj[x]] = c.hom(x, x)[c.identity(x)];
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t g = 0; g < c.hom(y, z).size(); ++g)
          for (std::size_t f = 0; f < c.hom(x, y).size(); ++f) {
            auto gf = c.compose(x, y, z, g, f);
            if (gf == npos) continue;
            comp.push_back({obj[x], obj[y], obj[z], c.hom(y, z)[g], c.hom(x, y)[f], c.hom(x, z)[gf]});
          }
  return document("category", Json{{"objects", strings(obj.atoms())},
                                   {"homs", homs},
                                   {"identities", ids},
                                   {"composition", sorted_rows(std::move(comp))}});
}

FinCategory category_from_json(const Json& j, const std::string& at) {
  only_fields(j, {"objects", "homs", "identities", "composition"}, at);
  FinSet obj = atom_set(field(j, "objects", at), child(at, "objects"));
  FinCategory::Builder b(obj);
  const auto& homs = field(j, "homs", at);
  need_object(homs, child(at, "homs"));
  for (const auto& [x, rowj] : homs.items()) {
    auto ax = child(child(at, "homs"), x);
    if (!obj.contains(x)) throw SchemaError(ax, "unknown object '" + x + "'");
    need_object(rowj, ax);
    for (const auto& [y, arrows] : rowj.items()) {
      if (!obj.contains(y)) throw SchemaError(child(ax, y), "unknown object '" + y + "'");
      b.hom(x, y, atom_set(arrows, child(ax, y)));
    }
  }
  const auto& ids = field(j, "identities", at);
  need_object(ids, child(at, "identities"));
  for (const auto& [x, id] : ids.items()) {
    if (!obj.contains(x)) throw SchemaError(child(child(at, "identities"), x), "unknown object '" + x + "'");
    b.identity(x, atom(id, child(child(at, "identities"), x)));
  }
  const auto& comp = field(j, "composition", at);
  need_array(comp, child(at, "composition"));
  for (std::size_t i = 0; i < comp.size(); ++i) {
    auto ai = child(child(at, "composition"), i);
    const auto& r = row(comp[i], 6, ai);
    for (std::size_t k = 0; k < 3; ++k) element(obj, r[k], child(ai, k), "object");
    b.compose(atom(r[0], ai), atom(r[1], ai), atom(r[2], ai), atom(r[3], child(ai, 3)), atom(r[4], child(ai, 4)),
              atom(r[5], child(ai, 5)));
  }
  return b.build();
}

Json monad_to_json(const SpanMonad& m) { return document("monad", nested(to_json(monad_to_category(m)))); }

SpanMonad monad_from_json(const Json& j, const std::string& at) {
  return category_to_monad(*lawful_category(j, at));
}

// ---- mw-monads

Json to_json(const MwMonad& m) {
  const auto& c = *m.base;
  const auto& obj = c.objects();
  const std::size_t n = obj.size();
  const auto T = [&](std::size_t x) { return m.object_map(x); };
  Json ext = Json::object();
  for (std::size_t x = 0; x < n; ++x) {
    ext[obj[x]] = Json::object();
    for (std::size_t y = 0; y < n; ++y) {
      Json e = Json::object();
      for (std::size_t f = 0; f < c.hom(x, T(y)).size(); ++f)
        e[c.hom(x, T(y))[f]] = c.hom(T(x), T(y))[m.apply(x, y, f)];
      ext[obj[x]][obj[y]] = e;
    }
  }
  return document("mw_monad", Json{{"base", nested(to_json(c))},
                                   {"object_map", object_map_to_json(m.object_map)},
                                   {"ext", ext},
                                   {"units", per_object(obj, [&](std::size_t x) { return c.hom(x, T(x))[m.units[x]]; })}});
}

MwMonad mw_monad_from_json(const Json& j, const std::string& at) {
  only_fields(j, {"base", "object_map", "ext", "units"}, at);
  auto c = std::make_shared<const FinCategory>(category_from_json(field(j, "base", at), child(at, "base")));
  const auto& obj = c->objects();
  const std::size_t n = obj.size();
  auto T = object_map_from_json(field(j, "object_map", at), obj, child(at, "object_map"));
  MwMonad m{c, T, std::vector<std::vector<std::size_t>>(n * n), std::vector<std::size_t>(n)};
  read_per_object(field(j, "ext", at), obj, child(at, "ext"), [&](std::size_t x, const Json& rowj, const std::string& ax) {
    read_per_object(rowj, obj, ax, [&](std::size_t y, const Json& e, const std::string& ay) {
      const auto& dom = c->hom(x, T(y));
      const auto& cod = c->hom(T(x), T(y));
      read_per_object(e, dom, ay, [&](std::size_t, const Json& img, const std::string& af) {
        m.ext[x * n + y].push_back(element(cod, img, af, "arrow"));
      });
    });
  });
  read_per_object(field(j, "units", at), obj, child(at, "units"), [&](std::size_t x, const Json& u, const std::string& ax) {
    m.units[x] = element(c->hom(x, T(x)), u, ax, "arrow");
  });
  return m;
}

// ---- warpings, wreaths, algebras

namespace {

Json base_and_endo(const SpanMonad& base, const SpanPtr& endo) {
  return Json{{"base", nested(to_json(monad_to_category(base)))}, {"endo", span_to_json(*endo)}};
}

std::pair<SpanMonad, SpanPtr> read_base_and_endo(const Json& j, const std::string& at) {
  auto base = category_to_monad(*lawful_category(field(j, "base", at), child(at, "base")));
  auto endo = span_from_json(field(j, "endo", at), base.objects(), base.objects(), child(at, "endo"));
  return {std::move(base), std::move(endo)};
}

}  // namespace

Json to_json(const Warping& w) {
  Json out = base_and_endo(w.base, w.endo);
  out["t"] = cell_to_json(w.t);
  out["k"] = cell_to_json(w.k);
  return document("warping", out);
}

Warping warping_from_json(const Json& j, const std::string& at) {
  only_fields(j, {"base", "endo", "t", "k"}, at);
  auto [base, endo] = read_base_and_endo(j, at);
  PastingEnv env = base_env(base, endo);
  auto ab = env.word_span({"A", "B"});
  Cell2 t = cell_from_json(field(j, "t", at), env.word_span({"A", "B", "A"}), ab, child(at, "t"));
  Cell2 k = cell_from_json(field(j, "k", at), identity_span(base.objects()), ab, child(at, "k"));
  return Warping{base, endo, std::move(t), std::move(k)};
}

Json to_json(const Wreath& w) {
  Json out = base_and_endo(w.base, w.endo);
  out["d"] = cell_to_json(w.d);
  out["q"] = cell_to_json(w.q);
  out["j"] = cell_to_json(w.j);
  return document("wreath", out);
}

Wreath wreath_from_json(const Json& j, const std::string& at) {
  only_fields(j, {"base", "endo", "d", "q", "j"}, at);
  auto [base, endo] = read_base_and_endo(j, at);
  PastingEnv env = base_env(base, endo);
  auto ab = env.word_span({"A", "B"});
  Cell2 d = cell_from_json(field(j, "d", at), env.word_span({"B", "A"}), ab, child(at, "d"));
  Cell2 q = cell_from_json(field(j, "q", at), env.word_span({"A", "A"}), ab, child(at, "q"));
  Cell2 u = cell_from_json(field(j, "j", at), identity_span(base.objects()), ab, child(at, "j"));
  return Wreath{base, endo, std::move(d), std::move(q), std::move(u)};
}

Json to_json(const WarpAlgebra& a) {
  Json module;
  if (a.module->arity() == 0) {
    module = "identity";
  } else {
    module = Json{{"targets", strings(a.module->dst().atoms())}, {"entries", span_to_json(*a.module)}};
  }
  return document("algebra", Json{{"warping", nested(to_json(a.warping))},
                                  {"module", module},
                                  {"action", cell_to_json(a.action)}});
}

WarpAlgebra algebra_from_json(const Json& j, const std::string& at) {
  only_fields(j, {"warping", "module", "action"}, at);
  Warping w = warping_from_json(field(j, "warping", at), child(at, "warping"));
  const auto& mj = field(j, "module", at);
  auto am = child(at, "module");
  SpanPtr module;
  if (mj.is_string()) {
    module = span_from_json(mj, w.base.objects(), w.base.objects(), am);
  } else {
    only_fields(mj, {"targets", "entries"}, am);
    FinSet targets = atom_set(field(mj, "targets", am), child(am, "targets"));
    module = span_from_json(field(mj, "entries", am), w.base.objects(), targets, child(am, "entries"));
  }
  PastingEnv env = warping_env(w);
  env.bind_generator("M", module);
  Cell2 action = cell_from_json(field(j, "action", at), env.word_span({"M", "B", "A"}), env.word_span({"M", "B"}),
                                child(at, "action"));
  return WarpAlgebra{std::move(w), module, std::move(action)};
}

// ---- skew structures

namespace {

struct SkewNames {
  const SkewBicategory& s;
  const Atom& obj(std::size_t x) const { return s.objects[x]; }
  const Atom& cell(std::size_t x, std::size_t y, std::size_t i) const { return s.hom(x, y).objects()[i]; }
  const Atom& arrow(std::size_t x, std::size_t y, std::size_t a) const { return s.hom(x, y).arrow_name(a); }
};

struct SkewReader {
  const SkewBicategory& s;
  std::size_t obj(const Json& j, const std::string& at) const { return element(s.objects, j, at, "object"); }
  std::size_t cell(std::size_t x, std::size_t y, const Json& j, const std::string& at) const {
    return element(s.hom(x, y).objects(), j, at, "1-cell");
  }
  std::size_t arrow(std::size_t x, std::size_t y, const Json& j, const std::string& at) const {
    return named_arrow(s.hom(x, y), j, at);
  }
};

}  // namespace

Json to_json(const SkewBicategory& s) {
  const std::size_t n = s.size();
  SkewNames nm{s};
  Json homs = Json::object();
  for (std::size_t x = 0; x < n; ++x) {
    homs[nm.obj(x)] = Json::object();
    for (std::size_t y = 0; y < n; ++y) {
      unique_arrow_names(s.hom(x, y), "hom(" + nm.obj(x) + "," + nm.obj(y) + ")");
      homs[nm.obj(x)][nm.obj(y)] = nested(to_json(s.hom(x, y)));
    }
  }
  std::vector<std::vector<Atom>> comp, whisk, alpha, lambda, rho;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto& t = s.composition(x, y, z);
        const auto &f = s.hom(x, y), &g = s.hom(y, z);
        for (std::size_t gi = 0; gi < g.object_count(); ++gi)
          for (std::size_t fi = 0; fi < f.object_count(); ++fi)
            comp.push_back({nm.obj(x), nm.obj(y), nm.obj(z), nm.cell(y, z, gi), nm.cell(x, y, fi),
                            nm.cell(x, z, t.objects.at(gi * f.object_count() + fi))});
        for (std::size_t b = 0; b < g.arrow_count(); ++b)
          for (std::size_t c = 0; c < f.arrow_count(); ++c)
            whisk.push_back({nm.obj(x), nm.obj(y), nm.obj(z), nm.arrow(y, z, b), nm.arrow(x, y, c),
                             nm.arrow(x, z, t.morphisms.at(b * f.arrow_count() + c))});
      }
  for (const auto& [k, a] : s.alpha)
    alpha.push_back({nm.obj(k[0]), nm.obj(k[1]), nm.obj(k[2]), nm.obj(k[3]), nm.cell(k[2], k[3], k[4]),
                     nm.cell(k[1], k[2], k[5]), nm.cell(k[0], k[1], k[6]), nm.arrow(k[0], k[3], a)});
  for (const auto& [k, a] : s.lambda)
    lambda.push_back({nm.obj(k[0]), nm.obj(k[1]), nm.cell(k[0], k[1], k[2]), nm.arrow(k[0], k[1], a)});
  for (const auto& [k, a] : s.rho)
    rho.push_back({nm.obj(k[0]), nm.obj(k[1]), nm.cell(k[0], k[1], k[2]), nm.arrow(k[0], k[1], a)});
  return document("skew_bicategory",
                  Json{{"objects", strings(s.objects.atoms())},
                       {"homs", homs},
                       {"composition", sorted_rows(std::move(comp))},
                       {"whiskering", sorted_rows(std::move(whisk))},
                       {"units", per_object(s.objects, [&](std::size_t x) { return nm.cell(x, x, s.units[x]); })},
                       {"alpha", sorted_rows(std::move(alpha))},
                       {"lambda", sorted_rows(std::move(lambda))},
                       {"rho", sorted_rows(std::move(rho))}});
}

SkewBicategory skew_bicategory_from_json(const Json& j, const std::string& at) {
  only_fields(j, {"objects", "homs", "composition", "whiskering", "units", "alpha", "lambda", "rho"}, at);
  SkewBicategory s;
  s.objects = atom_set(field(j, "objects", at), child(at, "objects"));
  const std::size_t n = s.size();
  s.homs.resize(n * n);
  read_per_object(field(j, "homs", at), s.objects, child(at, "homs"), [&](std::size_t x, const Json& rowj,
                                                                           const std::string& ax) {
    read_per_object(rowj, s.objects, ax, [&](std::size_t y, const Json& c, const std::string& ay) {
      auto cat = std::make_shared<const FinCategory>(category_from_json(c, ay));
      arrow_names(*cat, ay);
      s.homs[x * n + y] = cat;
    });
  });
  for (const auto& h : s.homs) {
    auto r = validate_category(*h);
    if (!r.structurally_sound()) return s;  // reported by the validator
  }
  SkewReader rd{s};
  s.comp.resize(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto& t = s.comp[(x * n + y) * n + z];
        t.objects.assign(s.hom(y, z).object_count() * s.hom(x, y).object_count(), npos);
        t.morphisms.assign(s.hom(y, z).arrow_count() * s.hom(x, y).arrow_count(), npos);
      }
  auto table_rows = [&](const char* key, bool morphisms) {
    const auto& rows = field(j, key, at);
    need_array(rows, child(at, key));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto ai = child(child(at, key), i);
      const auto& r = row(rows[i], 6, ai);
      auto x = rd.obj(r[0], child(ai, 0)), y = rd.obj(r[1], child(ai, 1)), z = rd.obj(r[2], child(ai, 2));
      auto& t = s.comp[(x * n + y) * n + z];
      if (morphisms) {
        auto b = rd.arrow(y, z, r[3], child(ai, 3)), c = rd.arrow(x, y, r[4], child(ai, 4));
        t.morphisms[b * s.hom(x, y).arrow_count() + c] = rd.arrow(x, z, r[5], child(ai, 5));
      } else {
        auto g = rd.cell(y, z, r[3], child(ai, 3)), f = rd.cell(x, y, r[4], child(ai, 4));
        t.objects[g * s.hom(x, y).object_count() + f] = rd.cell(x, z, r[5], child(ai, 5));
      }
    }
  };
  table_rows("composition", false);
  table_rows("whiskering", true);
  s.units.resize(n);
  read_per_object(field(j, "units", at), s.objects, child(at, "units"),
                  [&](std::size_t x, const Json& u, const std::string& ax) { s.units[x] = rd.cell(x, x, u, ax); });
  const auto& alpha = field(j, "alpha", at);
  need_array(alpha, child(at, "alpha"));
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    auto ai = child(child(at, "alpha"), i);
    const auto& r = row(alpha[i], 8, ai);
    std::size_t w = rd.obj(r[0], child(ai, 0)), x = rd.obj(r[1], child(ai, 1)), y = rd.obj(r[2], child(ai, 2)),
                z = rd.obj(r[3], child(ai, 3));
    std::array<std::size_t, 7> key{w, x, y, z, rd.cell(y, z, r[4], child(ai, 4)), rd.cell(x, y, r[5], child(ai, 5)),
                                   rd.cell(w, x, r[6], child(ai, 6))};
    if (!s.alpha.emplace(key, rd.arrow(w, z, r[7], child(ai, 7))).second)
      throw SchemaError(ai, "alpha given twice at one tuple");
  }
  auto unitor = [&](const char* key, std::map<std::array<std::size_t, 3>, std::size_t>& out) {
    const auto& rows = field(j, key, at);
    need_array(rows, child(at, key));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto ai = child(child(at, key), i);
      const auto& r = row(rows[i], 4, ai);
      auto x = rd.obj(r[0], child(ai, 0)), y = rd.obj(r[1], child(ai, 1));
      if (!out.emplace(std::array<std::size_t, 3>{x, y, rd.cell(x, y, r[2], child(ai, 2))},
                       rd.arrow(x, y, r[3], child(ai, 3)))
               .second)
        throw SchemaError(ai, std::string(key) + " given twice at one 1-cell");
    }
  };
  unitor("lambda", s.lambda);
  unitor("rho", s.rho);
  return s;
}

Json to_json(const SkewWarping& w) {
  const auto& s = w.base;
  const std::size_t n = s.size();
  SkewNames nm{s};
  const auto T = [&](std::size_t x) { return w.object_map(x); };
  Json ext = Json::object();
  for (std::size_t x = 0; x < n; ++x) {
    ext[nm.obj(x)] = Json::object();
    for (std::size_t y = 0; y < n; ++y) ext[nm.obj(x)][nm.obj(y)] = functor_to_json(w.ext.at(x * n + y));
  }
  std::vector<std::vector<Atom>> nu, kappa;
  for (const auto& [k, a] : w.nu)
    nu.push_back({nm.obj(k[0]), nm.obj(k[1]), nm.obj(k[2]), nm.cell(k[1], T(k[2]), k[3]), nm.cell(k[0], T(k[1]), k[4]),
                  nm.arrow(T(k[0]), T(k[2]), a)});
  for (const auto& [k, a] : w.kappa)
    kappa.push_back({nm.obj(k[0]), nm.obj(k[1]), nm.cell(k[0], T(k[1]), k[2]), nm.arrow(k[0], T(k[1]), a)});
  return document("skew_warping",
                  Json{{"base", nested(to_json(s))},
                       {"object_map", object_map_to_json(w.object_map)},
                       {"ext", ext},
                       {"units", per_object(s.objects, [&](std::size_t x) { return nm.cell(x, T(x), w.units[x]); })},
                       {"nu", sorted_rows(std::move(nu))},
                       {"nu0", per_object(s.objects, [&](std::size_t x) { return nm.arrow(T(x), T(x), w.nu0[x]); })},
                       {"kappa", sorted_rows(std::move(kappa))}});
}

SkewWarping skew_warping_from_json(const Json& j, const std::string& at) {
  only_fields(j, {"base", "object_map", "ext", "units", "nu", "nu0", "kappa"}, at);
  SkewWarping w;
  w.base = skew_bicategory_from_json(field(j, "base", at), child(at, "base"));
  auto br = validate_skew_bicategory(w.base);
  if (!br.valid()) throw LawViolation("base at " + loc(child(at, "base")) + " is not a skew bicategory", br);
  const auto& s = w.base;
  const std::size_t n = s.size();
  SkewReader rd{s};
  w.object_map = object_map_from_json(field(j, "object_map", at), s.objects, child(at, "object_map"));
  const auto T = [&](std::size_t x) { return w.object_map(x); };
  read_per_object(field(j, "ext", at), s.objects, child(at, "ext"), [&](std::size_t x, const Json& rowj,
                                                                         const std::string& ax) {
    read_per_object(rowj, s.objects, ax, [&](std::size_t y, const Json& f, const std::string& ay) {
      w.ext.push_back(functor_from_json(f, s.hom_ptr(x, T(y)), s.hom_ptr(T(x), T(y)), ay));
    });
  });
  w.units.resize(n);
  w.nu0.resize(n);
  read_per_object(field(j, "units", at), s.objects, child(at, "units"),
                  [&](std::size_t x, const Json& u, const std::string& ax) { w.units[x] = rd.cell(x, T(x), u, ax); });
  read_per_object(field(j, "nu0", at), s.objects, child(at, "nu0"),
                  [&](std::size_t x, const Json& a, const std::string& ax) { w.nu0[x] = rd.arrow(T(x), T(x), a, ax); });
  const auto& nu = field(j, "nu", at);
  need_array(nu, child(at, "nu"));
  for (std::size_t i = 0; i < nu.size(); ++i) {
    auto ai = child(child(at, "nu"), i);
    const auto& r = row(nu[i], 6, ai);
    auto x = rd.obj(r[0], child(ai, 0)), y = rd.obj(r[1], child(ai, 1)), z = rd.obj(r[2], child(ai, 2));
    std::array<std::size_t, 5> key{x, y, z, rd.cell(y, T(z), r[3], child(ai, 3)), rd.cell(x, T(y), r[4], child(ai, 4))};
    if (!w.nu.emplace(key, rd.arrow(T(x), T(z), r[5], child(ai, 5))).second)
      throw SchemaError(ai, "nu given twice at one pair");
  }
  const auto& kappa = field(j, "kappa", at);
  need_array(kappa, child(at, "kappa"));
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    auto ai = child(child(at, "kappa"), i);
    const auto& r = row(kappa[i], 4, ai);
    auto x = rd.obj(r[0], child(ai, 0)), y = rd.obj(r[1], child(ai, 1));
    if (!w.kappa.emplace(std::array<std::size_t, 3>{x, y, rd.cell(x, T(y), r[2], child(ai, 2))},
                         rd.arrow(x, T(y), r[3], child(ai, 3)))
             .second)
      throw SchemaError(ai, "kappa given twice at one 1-cell");
  }
  return w;
}

Json to_json(const SkewAlgebra& a) {
  const auto& s = a.warping.base;
  SkewNames nm{s};
  const auto T = [&](std::size_t x) { return a.warping.object_map(x); };
  std::vector<std::vector<Atom>> cnu, ckappa;
  for (const auto& [k, v] : a.cell_nu)
    cnu.push_back({nm.obj(k[0]), nm.obj(k[1]), nm.cell(k[1], a.object, k[2]), nm.cell(k[0], T(k[1]), k[3]),
                   nm.arrow(T(k[0]), a.object, v)});
  for (const auto& [k, v] : a.cell_kappa)
    ckappa.push_back({nm.obj(k[0]), nm.cell(k[0], a.object, k[1]), nm.arrow(k[0], a.object, v)});
  return document("skew_algebra",
                  Json{{"warping", nested(to_json(a.warping))},
                       {"object", nm.obj(a.object)},
                       {"e", per_object(s.objects, [&](std::size_t z) { return functor_to_json(a.e.at(z)); })},
                       {"cell_nu", sorted_rows(std::move(cnu))},
                       {"cell_kappa", sorted_rows(std::move(ckappa))}});
}

SkewAlgebra skew_algebra_from_json(const Json& j, const std::string& at) {
  only_fields(j, {"warping", "object", "e", "cell_nu", "cell_kappa"}, at);
  SkewAlgebra a;
  a.warping = skew_warping_from_json(field(j, "warping", at), child(at, "warping"));
  const auto& s = a.warping.base;
  SkewReader rd{s};
  const auto T = [&](std::size_t x) { return a.warping.object_map(x); };
  a.object = rd.obj(field(j, "object", at), child(at, "object"));
  const auto ao = a.object;
  a.e.resize(s.size());
  read_per_object(field(j, "e", at), s.objects, child(at, "e"), [&](std::size_t z, const Json& f, const std::string& az) {
    a.e[z] = functor_from_json(f, s.hom_ptr(z, ao), s.hom_ptr(T(z), ao), az);
  });
  const auto& cnu = field(j, "cell_nu", at);
  need_array(cnu, child(at, "cell_nu"));
  for (std::size_t i = 0; i < cnu.size(); ++i) {
    auto ai = child(child(at, "cell_nu"), i);
    const auto& r = row(cnu[i], 5, ai);
    auto x = rd.obj(r[0], child(ai, 0)), y = rd.obj(r[1], child(ai, 1));
    std::array<std::size_t, 4> key{x, y, rd.cell(y, ao, r[2], child(ai, 2)), rd.cell(x, T(y), r[3], child(ai, 3))};
    if (!a.cell_nu.emplace(key, rd.arrow(T(x), ao, r[4], child(ai, 4))).second)
      throw SchemaError(ai, "cell_nu given twice at one pair");
  }
  const auto& ck = field(j, "cell_kappa", at);
  need_array(ck, child(at, "cell_kappa"));
  for (std::size_t i = 0; i < ck.size(); ++i) {
    auto ai = child(child(at, "cell_kappa"), i);
    const auto& r = row(ck[i], 3, ai);
    auto x = rd.obj(r[0], child(ai, 0));
    if (!a.cell_kappa.emplace(std::array<std::size_t, 2>{x, rd.cell(x, ao, r[1], child(ai, 1))},
                              rd.arrow(x, ao, r[2], child(ai, 2)))
             .second)
      throw SchemaError(ai, "cell_kappa given twice at one 1-cell");
  }
  return a;
}

}  // namespace warp
