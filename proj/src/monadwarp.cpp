#include "warp/monadwarp.hpp"

namespace warp {

namespace {

PastingEnv monad_env(const SpanPtr& carrier, const Cell2& mult, const Cell2& unit) {
  PastingEnv env;
  env.bind_generator("B", carrier);
  env.bind_cell("p", {"B", "B"}, {"B"}, mult);
  env.bind_cell("e", {}, {"B"}, unit);
  return env;
}

void run_axioms(ValidationReport& report, const std::vector<AxiomEquation>& axioms, const PastingEnv& env) {
  for (const auto& ax : axioms) {
    try {
      check_equation(report, ax.axiom, ax.law, ax.lhs, ax.rhs, env);
    } catch (const StructureError& e) {
      report.add_structural(std::string(ax.law) + ": " + e.what());
    }
  }
}

}  // namespace

ValidationReport SpanMonad::check(const SpanPtr& carrier, const Cell2& mult, const Cell2& unit,
                                  const ValidationOptions& opts) {
  ValidationReport report(opts);
  if (!carrier || !(carrier->src() == carrier->dst())) {
    report.add_structural("monad carrier must be an endo-span");
    return report;
  }
  PastingEnv env;
  try {
    env = monad_env(carrier, mult, unit);
  } catch (const StructureError& e) {
    report.add_structural(e.what());
    return report;
  }
  static const std::vector<AxiomEquation> laws = {
      {1, "associativity", "p(pB)", "p(Bp)"},
      {2, "left unit", "p(eB)", "1[B]"},
      {3, "right unit", "p(Be)", "1[B]"},
  };
  run_axioms(report, laws, env);
  return report;
}

SpanMonad SpanMonad::make(SpanPtr carrier, Cell2 mult, Cell2 unit) {
  auto report = check(carrier, mult, unit);
  if (!report.structurally_sound()) throw StructureError("monad data: " + report.summary());
  if (!report.valid()) throw LawViolation("not a monad", report);
  return SpanMonad(std::move(carrier), std::move(mult), std::move(unit));
}

PastingEnv base_env(const SpanMonad& base, const SpanPtr& endo) {
  PastingEnv env = monad_env(base.carrier(), base.mult(), base.unit());
  env.bind_generator("A", endo);
  return env;
}

// ---------------------------------------------------------------------------

SpanMonad category_to_monad(const FinCategory& c) {
  auto report = validate_category(c, {1});
  if (!report.structurally_sound()) throw StructureError("category tables: " + report.summary());
  if (!report.valid()) throw LawViolation("not a category", report);
  const auto& obj = c.objects();
  const std::size_t n = obj.size();
  std::map<std::pair<Atom, Atom>, std::vector<Atom>> atoms;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) atoms[{obj[x], obj[y]}] = c.hom(x, y).atoms();
  SpanPtr b = generator_span(obj, obj, atoms);
  SpanPtr bb = compose_spans(*b, *b);
  Cell2 p = Cell2::from_function(bb, b, [&](const Path& path) {
    std::size_t x = obj.index_of(path.pivot(0));
    std::size_t y = obj.index_of(path.pivot(1));
    std::size_t z = obj.index_of(path.pivot(2));
    std::size_t f = c.hom(x, y).index_of(path.entry(0));
    std::size_t g = c.hom(y, z).index_of(path.entry(1));
    return Path::step(obj[x], c.hom(x, z)[c.compose(x, y, z, g, f)], obj[z]);
  });
  Cell2 e = Cell2::from_function(identity_span(obj), b, [&](const Path& path) {
    std::size_t x = obj.index_of(path.source());
    return Path::step(obj[x], c.hom(x, x)[c.identity(x)], obj[x]);
  });
  return SpanMonad::make(b, std::move(p), std::move(e));
}

Atom carrier_atom(const Path& p) {
  if (p.arity() == 1) return p.entry(0);
  if (p.arity() == 0) return "id";
  Atom out;
  const auto& a = p.atoms();
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (i > 1) out += '.';
    out += a[i];
  }
  return out;
}

FinCategory monad_to_category(const SpanMonad& m) { return monad_to_category(m, carrier_atom); }

FinCategory monad_to_category(const SpanMonad& m, const std::function<Atom(const Path&)>& carrier_atom) {
  const auto& obj = m.objects();
  const auto& b = *m.carrier();
  FinCategory::Builder builder(obj);
  for (std::size_t x = 0; x < obj.size(); ++x)
    for (std::size_t y = 0; y < obj.size(); ++y) {
      std::vector<Atom> names;
      for (const auto& p : b.entry(x, y)) names.push_back(carrier_atom(p));
      builder.hom(obj[x], obj[y], FinSet(std::move(names)));
    }
  for (std::size_t x = 0; x < obj.size(); ++x)
    builder.identity(obj[x], carrier_atom(m.unit()(Path::trivial(obj[x]))));
  for (std::size_t x = 0; x < obj.size(); ++x)
    for (std::size_t y = 0; y < obj.size(); ++y)
      for (std::size_t z = 0; z < obj.size(); ++z)
        for (const auto& f : b.entry(x, y))
          for (const auto& g : b.entry(y, z))
            builder.compose(obj[x], obj[y], obj[z], carrier_atom(g), carrier_atom(f),
                            carrier_atom(m.mult()(f.then(g))));
  return builder.build();
}

// ---------------------------------------------------------------------------

const std::vector<AxiomEquation>& warping_axioms() {
  static const std::vector<AxiomEquation> axioms = {
      {1, "multiplicativity", "t(ApA)(tBA)", "(Ap)(tB)(ABt)"},
      {2, "unit absorbed", "t(kA)", "Ae"},
      {3, "unit restored", "(Ap)(tB)(ABk)", "1[AB]"},
  };
  return axioms;
}

// q is typed AA => AB throughout; see README.
const std::vector<AxiomEquation>& wreath_axioms() {
  static const std::vector<AxiomEquation> axioms = {
      {1, "d respects p", "(Ap)(dB)(Bd)", "d(pA)"},
      {2, "d respects e", "d(eA)", "Ae"},
      {3, "d respects q", "(Ap)(qB)(Ad)(dA)", "(Ap)(dB)(Bq)"},
      {4, "d respects j", "(Ap)(jB)", "(Ap)(dB)(Bj)"},
      {5, "q associative", "(Ap)(qB)(Aq)", "(Ap)(qB)(Ad)(qA)"},
      {6, "q right unit", "(Ap)(qB)(Aj)", "Ae"},
      {7, "q left unit", "(Ap)(qB)(Ad)(jA)", "Ae"},
  };
  return axioms;
}

PastingEnv warping_env(const Warping& w) {
  PastingEnv env = base_env(w.base, w.endo);
  env.bind_cell("t", {"A", "B", "A"}, {"A", "B"}, w.t);
  env.bind_cell("k", {}, {"A", "B"}, w.k);
  return env;
}

PastingEnv wreath_env(const Wreath& w) {
  PastingEnv env = base_env(w.base, w.endo);
  env.bind_cell("d", {"B", "A"}, {"A", "B"}, w.d);
  env.bind_cell("q", {"A", "A"}, {"A", "B"}, w.q);
  env.bind_cell("j", {}, {"A", "B"}, w.j);
  return env;
}

namespace {

template <class Env>
ValidationReport validate_with(const Env& make_env, const std::vector<AxiomEquation>& axioms,
                               const ValidationOptions& opts) {
  ValidationReport report(opts);
  PastingEnv env;
  try {
    env = make_env();
  } catch (const StructureError& e) {
    report.add_structural(e.what());
    return report;
  }
  run_axioms(report, axioms, env);
  return report;
}

}  // namespace

ValidationReport validate_warping(const Warping& w, const ValidationOptions& opts) {
  return validate_with([&] { return warping_env(w); }, warping_axioms(), opts);
}

ValidationReport validate_wreath(const Wreath& w, const ValidationOptions& opts) {
  return validate_with([&] { return wreath_env(w); }, wreath_axioms(), opts);
}

ValidationReport validate_mw_monad(const MwMonad& m, const ValidationOptions& opts) {
  ValidationReport report(opts);
  if (!m.base) {
    report.add_structural("mw-monad has no base category");
    return report;
  }
  const auto& c = *m.base;
  report.absorb(validate_category(c, opts), "base");
  if (!report.valid()) return report;
  const std::size_t n = c.object_count();
  const auto& obj = c.objects();
  if (!(m.object_map.dom() == obj) || !(m.object_map.cod() == obj))
    report.add_structural("object map must be an endofunction of the objects");
  if (m.ext.size() != n * n) report.add_structural("ext must have one map per pair of objects");
  if (m.units.size() != n) report.add_structural("one unit arrow per object is needed");
  if (!report.structurally_sound()) return report;
  auto T = [&](std::size_t x) { return m.object_map(x); };
  for (std::size_t x = 0; x < n; ++x) {
    if (m.units[x] >= c.hom(x, T(x)).size())
      report.add_structural("K_" + obj[x] + " is not in hom(" + obj[x] + "," + obj[T(x)] + ")");
    for (std::size_t y = 0; y < n; ++y) {
      const auto& e = m.ext[x * n + y];
      if (e.size() != c.hom(x, T(y)).size()) {
        report.add_structural("ext at (" + obj[x] + "," + obj[y] + ") is not total");
        continue;
      }
      for (auto v : e)
        if (v >= c.hom(T(x), T(y)).size())
          report.add_structural("ext at (" + obj[x] + "," + obj[y] + ") leaves hom(T" + obj[x] + ",T" + obj[y] + ")");
    }
  }
  if (!report.structurally_sound()) return report;

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t f = 0; f < c.hom(x, T(y)).size(); ++f)
          for (std::size_t g = 0; g < c.hom(y, T(z)).size(); ++g) {
            std::size_t tg = m.apply(y, z, g);
            std::size_t lhs = m.apply(x, z, c.compose(x, T(y), T(z), tg, f));
            std::size_t rhs = c.compose(T(x), T(y), T(z), tg, m.apply(x, y, f));
            if (lhs != rhs)
              report.add_violation(1, "T(Tg o f) = Tg o Tf",
                                   "f=" + c.hom(x, T(y))[f] + ":" + obj[x] + "->" + obj[T(y)] + ", g=" +
                                       c.hom(y, T(z))[g] + ":" + obj[y] + "->" + obj[T(z)]);
          }
  for (std::size_t x = 0; x < n; ++x)
    if (m.apply(x, x, m.units[x]) != c.identity(T(x)))
      report.add_violation(2, "T K = 1", "K_" + obj[x] + "=" + c.hom(x, T(x))[m.units[x]]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < c.hom(x, T(y)).size(); ++f)
        if (c.compose(x, T(x), T(y), m.apply(x, y, f), m.units[x]) != f)
          report.add_violation(3, "f = Tf o K", "f=" + c.hom(x, T(y))[f] + ":" + obj[x] + "->" + obj[T(y)]);
  return report;
}

// ---------------------------------------------------------------------------

std::optional<FinFunction> star_shape(const Span& a) {
  if (a.arity() != 1) return std::nullopt;
  std::vector<std::size_t> images(a.dst().size(), npos);
  for (std::size_t c = 0; c < a.src().size(); ++c)
    for (std::size_t d = 0; d < a.dst().size(); ++d) {
      const auto& e = a.entry(c, d);
      if (e.empty()) continue;
      if (e.size() != 1 || e.front().entry(0) != kStarAtom || images[d] != npos) return std::nullopt;
      images[d] = c;
    }
  for (auto v : images)
    if (v == npos) return std::nullopt;
  return FinFunction(a.dst(), a.src(), std::move(images));
}

std::optional<FinFunction> endo_shape(const Span& a) {
  if (a.arity() == 0 && a.src() == a.dst() && a == *identity_span(a.src())) return FinFunction::identity(a.src());
  return star_shape(a);
}

Path endo_element(const Span& a, const Atom& tz, const Atom& z) {
  return a.arity() == 0 ? Path::trivial(z) : Path::step(tz, kStarAtom, z);
}

MwMonad mw_view(const Warping& w) {
  const auto& objs = w.base.objects();
  auto T = endo_shape(*w.endo);
  if (!T || !(T->dom() == objs) || !(T->cod() == objs))
    throw StructureError("endo-span is not of the form T* for an endofunction T");
  if (w.base.carrier()->arity() != 1) throw StructureError("base monad carrier is not a one-step span");
  auto base = std::make_shared<const FinCategory>(monad_to_category(w.base));
  const auto& obj = base->objects();
  const std::size_t n = obj.size();
  auto a_path = [&](const Atom& from, const Atom& to) { return endo_element(*w.endo, from, to); };
  MwMonad m{base, *T, std::vector<std::vector<std::size_t>>(n * n), std::vector<std::size_t>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    const Atom& tx = obj[(*T)(x)];
    for (std::size_t y = 0; y < n; ++y) {
      const Atom& ty = obj[(*T)(y)];
      for (const auto& f : base->hom(x, (*T)(y))) {
        Path in = a_path(tx, obj[x]).then(Path::step(obj[x], f, ty)).then(a_path(ty, obj[y]));
        const Path& out = w.t(in);
        m.ext[x * n + y].push_back(base->hom((*T)(x), (*T)(y)).index_of(out.entry(0)));
      }
    }
    const Path& kx = w.k(Path::trivial(obj[x]));
    m.units[x] = base->hom(x, (*T)(x)).index_of(kx.entry(0));
  }
  return m;
}

Warping mw_to_warping(const MwMonad& m) {
  const auto& c = *m.base;
  const auto& obj = c.objects();
  SpanMonad base = category_to_monad(c);
  SpanPtr a = restrict_star(m.object_map);
  PastingEnv env = base_env(base, a);
  auto T = [&](std::size_t x) { return m.object_map(x); };
  Cell2 t = Cell2::from_function(env.word_span({"A", "B", "A"}), env.word_span({"A", "B"}), [&](const Path& p) {
    std::size_t z = obj.index_of(p.pivot(1));
    std::size_t y = obj.index_of(p.target());
    std::size_t f = c.hom(z, T(y)).index_of(p.entry(1));
    const Atom& tf = c.hom(T(z), T(y))[m.apply(z, y, f)];
    return Path({obj[T(z)], tf, obj[T(y)], kStarAtom, obj[y]});
  });
  Cell2 k = Cell2::from_function(identity_span(obj), env.word_span({"A", "B"}), [&](const Path& p) {
    std::size_t x = obj.index_of(p.source());
    return Path({obj[x], c.hom(x, T(x))[m.units[x]], obj[T(x)], kStarAtom, obj[x]});
  });
  return Warping{std::move(base), std::move(a), std::move(t), std::move(k)};
}

Warping identity_warping(const SpanMonad& base) {
  SpanPtr a = identity_span(base.objects());
  PastingEnv env = base_env(base, a);
  return Warping{base, a, Cell2::identity(env.word_span({"A", "B", "A"})), base.unit()};
}

Wreath identity_wreath(const SpanMonad& base) {
  SpanPtr a = identity_span(base.objects());
  PastingEnv env = base_env(base, a);
  return Wreath{base, a, Cell2::identity(env.word_span({"B", "A"})), base.unit(), base.unit()};
}

MwMonad identity_mw_monad(const CategoryPtr& c) {
  const std::size_t n = c->object_count();
  MwMonad m{c, FinFunction::identity(c->objects()), std::vector<std::vector<std::size_t>>(n * n),
            std::vector<std::size_t>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    m.units[x] = c->identity(x);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < c->hom(x, y).size(); ++f) m.ext[x * n + y].push_back(f);
  }
  return m;
}

}  // namespace warp
