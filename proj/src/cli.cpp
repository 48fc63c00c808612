#include "warp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "warp/enumerate.hpp"

namespace warp {

int RunReport::exit_code() const {
  if (verdict == "valid") return 0;
  if (verdict == "invalid") return 1;
  return 2;
}

Json RunReport::to_json() const {
  Json w = Json::array();
  for (const auto& v : witnesses) w.push_back(Json{{"axiom", v.axiom}, {"law", v.law}, {"witness", v.witness}});
  Json out{{"command", command},
           {"input", Json{{"kind", kind.empty() ? Json() : Json(kind)},
                          {"digest", digest.empty() ? Json() : Json("fnv1a64:" + digest)}}},
           {"verdict", verdict},
           {"errors", errors},
           {"witnesses", w},
           {"violation_count", violation_count}};
  if (!counts.is_null()) out["counts"] = counts;
  if (!instances.is_null()) out["instances"] = instances;
  if (wall_ms) out["wall_time_ms"] = *wall_ms;
  return out;
}

std::string RunReport::pretty() const {
  std::ostringstream os;
  os << command << " " << (kind.empty() ? "?" : kind) << ": " << verdict << "\n";
  for (const auto& e : errors) os << "  error: " << e << "\n";
  for (const auto& v : witnesses) os << "  axiom " << v.axiom << " (" << v.law << "): " << v.witness << "\n";
  if (violation_count > witnesses.size())
    os << "  (" << violation_count - witnesses.size() << " more violations)\n";
  if (!counts.is_null()) os << "  counts: " << counts.dump() << "\n";
  if (wall_ms) os << "  wall time: " << *wall_ms << " ms\n";
  return os.str();
}

namespace {

struct Settings {
  std::string format = "canonical";
  std::string witnesses = "all";
  bool timing = false;
  ValidationOptions opts() const { return ValidationOptions{witnesses == "first" ? 1u : 0u}; }
};

// Failure with a finished report.
struct Stop {
  RunReport report;
};

void take(RunReport& r, const ValidationReport& v) {
  r.errors.insert(r.errors.end(), v.structural().begin(), v.structural().end());
  r.witnesses = v.violations();
  r.violation_count = v.violation_count();
  r.verdict = !v.structurally_sound() ? "malformed" : v.valid() ? "valid" : "invalid";
}

[[noreturn]] void stop_with(RunReport r, const ValidationReport& v) {
  take(r, v);
  throw Stop{std::move(r)};
}

[[noreturn]] void stop_with(RunReport r, const std::string& verdict, const std::string& error) {
  r.verdict = verdict;
  r.errors.push_back(error);
  throw Stop{std::move(r)};
}

struct Input {
  std::string text;
  Json doc;
  Kind kind;
};

Input load(const std::string& path, RunReport& r) {
  std::ifstream in(path, std::ios::binary);
  if (!in) stop_with(r, "malformed", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  Input input{ss.str(), {}, Kind::category};
  r.digest = fnv1a64(input.text);
  r.kind = "";
  input.doc = parse_document(input.text);
  input.kind = kind_of(input.doc);
  r.kind = kind_name(input.kind);
  return input;
}

// Reads a structure, turning a lawless base into a finished report.
template <class F>
auto read_or_stop(RunReport& r, F&& read) -> decltype(read()) {
  try {
    return read();
  } catch (const LawViolation& e) {
    ValidationReport v;
    v.absorb(e.report(), "base");
    stop_with(r, v);
  }
}

ValidationReport validate_doc(const Input& in, RunReport& r, const ValidationOptions& o) {
  switch (in.kind) {
    case Kind::category:
    case Kind::monad:
      return validate_category(category_from_json(in.doc), o);
    case Kind::mw_monad:
      return validate_mw_monad(mw_monad_from_json(in.doc), o);
    case Kind::warping:
      return validate_warping(read_or_stop(r, [&] { return warping_from_json(in.doc); }), o);
    case Kind::wreath:
      return validate_wreath(read_or_stop(r, [&] { return wreath_from_json(in.doc); }), o);
    case Kind::algebra:
      return validate_algebra(read_or_stop(r, [&] { return algebra_from_json(in.doc); }), o);
    case Kind::skew_bicategory:
      return validate_skew_bicategory(skew_bicategory_from_json(in.doc), o);
    case Kind::skew_warping:
      return validate_skew_warping(read_or_stop(r, [&] { return skew_warping_from_json(in.doc); }), o);
    case Kind::skew_algebra:
      return validate_skew_algebra(read_or_stop(r, [&] { return skew_algebra_from_json(in.doc); }), o);
  }
  return ValidationReport(o);
}

void require_valid(const Input& in, RunReport& r, const ValidationOptions& o) {
  auto v = validate_doc(in, r, o);
  if (!v.valid()) stop_with(r, v);
}

// ---- commands

void cmd_validate(const std::string& file, const Settings& s, RunReport& r) {
  auto in = load(file, r);
  take(r, validate_doc(in, r, s.opts()));
}

[[noreturn]] void no_conversion(const RunReport& r, const std::string& to) {
  stop_with(r, "malformed", "no conversion from " + r.kind + " to " + to);
}

Json cmd_convert(const std::string& file, const std::string& to, const Settings& s, RunReport& r) {
  auto in = load(file, r);
  require_valid(in, r, s.opts());
  switch (in.kind) {
    case Kind::category:
    case Kind::monad:
      if (to != "monad") no_conversion(r, to);
      return monad_to_json(category_to_monad(category_from_json(in.doc)));
    case Kind::warping: {
      auto w = warping_from_json(in.doc);
      if (to == "warping") return to_json(w);
      if (to == "wreath") return to_json(warping_to_wreath(w));
      if (to == "monad") return monad_to_json(warping_to_monad(w).monad);
      if (to == "mw") {
        try {
          return to_json(mw_view(w));
        } catch (const StructureError& e) {
          stop_with(r, "malformed", e.what());
        }
      }
      no_conversion(r, to);
    }
    case Kind::wreath: {
      auto w = wreath_from_json(in.doc);
      if (to == "wreath") return to_json(w);
      if (to == "warping") return to_json(wreath_to_warping(w));
      if (to == "monad") return monad_to_json(wreath_to_monad(w).monad);
      if (to == "mw") {
        try {
          return to_json(mw_view(wreath_to_warping(w)));
        } catch (const StructureError& e) {
          stop_with(r, "malformed", e.what());
        }
      }
      no_conversion(r, to);
    }
    case Kind::mw_monad: {
      auto m = mw_monad_from_json(in.doc);
      if (to == "mw") return to_json(m);
      auto w = mw_to_warping(m);
      if (to == "warping") return to_json(w);
      if (to == "wreath") return to_json(warping_to_wreath(w));
      if (to == "monad") return monad_to_json(warping_to_monad(w).monad);
      no_conversion(r, to);
    }
    default:
      no_conversion(r, to);
  }
}

Json cmd_kleisli(const std::string& file, const Settings& s, RunReport& r) {
  auto in = load(file, r);
  require_valid(in, r, s.opts());
  switch (in.kind) {
    case Kind::mw_monad:
      return to_json(kleisli_category(mw_monad_from_json(in.doc)));
    case Kind::warping:
      try {
        return to_json(kleisli_category(mw_view(warping_from_json(in.doc))));
      } catch (const StructureError& e) {
        stop_with(r, "malformed", e.what());
      }
    case Kind::skew_warping:
      return to_json(skew_kleisli(skew_warping_from_json(in.doc)));
    default:
      stop_with(r, "malformed", std::string("no Kleisli construction for ") + r.kind);
  }
}

struct EnumerateArgs {
  std::string kind;
  std::size_t max_objects = 2;
  std::size_t max_hom = 2;
  std::size_t max_candidates = EnumerationLimits{}.max_candidates;
  std::string object_map;
  std::string object;
  std::string side = "monoid-map";
  bool emit = false;
};

std::string map_label(const FinFunction& T) {
  std::string out;
  for (std::size_t x = 0; x < T.dom().size(); ++x)
    out += (out.empty() ? "" : ",") + T.dom()[x] + "->" + T.cod()[T(x)];
  return out;
}

FinFunction parse_object_map(const std::string& text, const FinSet& obj, RunReport& r) {
  std::map<Atom, Atom> assign;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) stop_with(r, "malformed", "--object-map entry '" + item + "' is not x=y");
    assign[item.substr(0, eq)] = item.substr(eq + 1);
  }
  try {
    return FinFunction::from_atoms(obj, obj, assign);
  } catch (const std::exception& e) {
    stop_with(r, "malformed", std::string("--object-map: ") + e.what());
  }
}

void check_bounds(const FinCategory& c, const EnumerateArgs& a, RunReport& r) {
  if (c.object_count() > a.max_objects)
    stop_with(r, "refused", "limit --max-objects=" + std::to_string(a.max_objects) + " exceeded: the base has " +
                                std::to_string(c.object_count()) + " objects");
  for (const auto& h : c.homs())
    if (h.size() > a.max_hom)
      stop_with(r, "refused", "limit --max-hom=" + std::to_string(a.max_hom) + " exceeded: a hom-set has " +
                                  std::to_string(h.size()) + " arrows");
}

void cmd_enumerate(const std::string& file, const EnumerateArgs& a, const Settings& s, RunReport& r) {
  auto in = load(file, r);
  require_valid(in, r, s.opts());
  EnumerationLimits limits{a.max_candidates};
  Json counts = Json::object();
  Json instances = Json::array();
  std::size_t total = 0, candidates = 0;
  auto refuse_kind = [&] { stop_with(r, "malformed", "cannot enumerate " + a.kind + " over a " + r.kind + " file"); };

  if (in.kind == Kind::category || in.kind == Kind::monad) {
    auto c = std::make_shared<const FinCategory>(category_from_json(in.doc));
    check_bounds(*c, a, r);
    std::vector<FinFunction> maps;
    if (!a.object_map.empty())
      maps.push_back(parse_object_map(a.object_map, c->objects(), r));
    else
      maps = all_object_maps(c->objects());
    SideCondition side = a.side == "full" ? SideCondition::full : SideCondition::monoid_map;
    auto base = category_to_monad(*c);
    Json per = Json::object();
    for (const auto& T : maps) {
      std::size_t count = 0;
      auto endo = restrict_star(T);
      auto run = [&](auto&& e, auto&& write) {
        count = e.instances.size();
        candidates += e.candidates;
        if (a.emit)
          for (const auto& x : e.instances) instances.push_back(write(x));
      };
      if (a.kind == "mw_monad")
        run(enumerate_mw_monads(c, T, limits), [](const MwMonad& m) { return to_json(m); });
      else if (a.kind == "warping")
        run(enumerate_warpings(base, endo, limits), [](const Warping& w) { return to_json(w); });
      else if (a.kind == "wreath")
        run(enumerate_wreaths(base, endo, limits), [](const Wreath& w) { return to_json(w); });
      else if (a.kind == "monad")
        run(enumerate_monads_on_ab(base, endo, side, limits), [](const MonadOnAB& m) { return monad_to_json(m.monad); });
      else
        refuse_kind();
      per[map_label(T)] = count;
      total += count;
    }
    counts["per_object_map"] = per;
  } else if (in.kind == Kind::mw_monad) {
    auto m = mw_monad_from_json(in.doc);
    check_bounds(*m.base, a, r);
    const auto& obj = m.base->objects();
    std::vector<std::size_t> objects;
    if (!a.object.empty()) {
      auto i = obj.find(a.object);
      if (!i) stop_with(r, "malformed", "--object: unknown object '" + a.object + "'");
      objects.push_back(*i);
    } else {
      for (std::size_t x = 0; x < obj.size(); ++x) objects.push_back(x);
    }
    Json per = Json::object();
    if (a.kind == "e_family") {
      for (auto x : objects) {
        auto e = enumerate_e_families(m, x, limits);
        per[obj[x]] = e.instances.size();
        total += e.instances.size();
        candidates += e.candidates;
      }
    } else if (a.kind == "em_algebra") {
      auto cm = classical_monad(warping_to_wreath(mw_to_warping(m)));
      for (auto x : objects) {
        auto e = enumerate_em_algebras(cm, x);
        per[obj[x]] = e.instances.size();
        total += e.instances.size();
        candidates += e.candidates;
      }
    } else {
      refuse_kind();
    }
    counts["per_object"] = per;
  } else if (in.kind == Kind::skew_warping || in.kind == Kind::skew_bicategory) {
    if (a.kind != "skew_warping") refuse_kind();
    auto shape = in.kind == Kind::skew_warping ? skew_warping_from_json(in.doc)
                                               : identity_skew_warping(skew_bicategory_from_json(in.doc));
    auto fam = skew_warping_families(shape, limits);
    total = fam.valid.size();
    candidates = fam.candidates;
    counts["rigid"] = fam.rigid;
    if (a.emit)
      for (const auto& w : fam.valid) instances.push_back(to_json(w));
  } else {
    refuse_kind();
  }
  counts["kind"] = a.kind;
  counts["instances"] = total;
  counts["candidates"] = candidates;
  r.counts = counts;
  if (a.emit) r.instances = instances;
  r.verdict = "valid";
}

std::string render(const RunReport& r, const Settings& s) {
  return s.format == "pretty" ? r.pretty() : emit(r.to_json());
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Validate, convert and enumerate finite monad structures"};
  app.require_subcommand(1);
  Settings s;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "canonical or pretty")->check(CLI::IsMember({"canonical", "pretty"}));
    sub->add_option("--witnesses", s.witnesses, "all or first")->check(CLI::IsMember({"all", "first"}));
    sub->add_flag("--timing", s.timing, "add wall time to the report");
  };
  std::string file, to;
  EnumerateArgs ea;

  auto* validate = app.add_subcommand("validate", "validate a structure file");
  validate->add_option("file", file)->required();
  common(validate);
  auto* convert = app.add_subcommand("convert", "convert between equivalent structures");
  convert->add_option("file", file)->required();
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"warping", "wreath", "monad", "mw"}));
  common(convert);
  auto* kleisli = app.add_subcommand("kleisli", "Kleisli construction");
  kleisli->add_option("file", file)->required();
  common(kleisli);
  auto* enumerate = app.add_subcommand("enumerate", "count every valid instance over a base");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--kind", ea.kind)
      ->required()
      ->check(CLI::IsMember({"mw_monad", "warping", "wreath", "monad", "e_family", "em_algebra", "skew_warping"}));
  enumerate->add_option("--max-objects", ea.max_objects);
  enumerate->add_option("--max-hom", ea.max_hom);
  enumerate->add_option("--max-candidates", ea.max_candidates);
  enumerate->add_option("--object-map", ea.object_map, "fixed object map, e.g. a=b,b=b");
  enumerate->add_option("--object", ea.object, "algebra object for e_family and em_algebra");
  enumerate->add_option("--side", ea.side)->check(CLI::IsMember({"monoid-map", "full"}));
  enumerate->add_flag("--emit", ea.emit, "list the instances");
  common(enumerate);

  CliResult res;
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = code == 0 ? 0 : 2;
    return res;
  }

  auto start = std::chrono::steady_clock::now();
  RunReport r;
  std::optional<Json> structure;
  try {
    if (*validate) {
      r.command = "validate";
      cmd_validate(file, s, r);
    } else if (*convert) {
      r.command = "convert";
      structure = cmd_convert(file, to, s, r);
    } else if (*kleisli) {
      r.command = "kleisli";
      structure = cmd_kleisli(file, s, r);
    } else {
      r.command = "enumerate";
      cmd_enumerate(file, ea, s, r);
    }
  } catch (Stop& st) {
    r = std::move(st.report);
  } catch (const SchemaError& e) {
    r.verdict = "malformed";
    r.errors.push_back(e.what());
  } catch (const LimitExceeded& e) {
    r.verdict = "refused";
    r.errors.push_back(e.what());
  } catch (const LawViolation& e) {
    take(r, e.report());
  } catch (const StructureError& e) {
    r.verdict = "malformed";
    r.errors.push_back(e.what());
  }
  if (structure) {
    res.out = emit(*structure);
    return res;
  }
  if (s.timing)
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  res.out = render(r, s);
  res.exit_code = r.exit_code();
  return res;
}

}  // namespace warp
