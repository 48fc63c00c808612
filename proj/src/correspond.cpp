#include "warp/correspond.hpp"

namespace warp {

namespace {

PastingEnv ab_env(const MonadOnAB& m) {
  PastingEnv env = base_env(m.base, m.endo);
  env.bind_cell("P", {"A", "B", "A", "B"}, {"A", "B"}, m.monad.mult());
  env.bind_cell("E", {}, {"A", "B"}, m.monad.unit());
  return env;
}

void require_valid(const ValidationReport& r, const char* what) {
  if (!r.structurally_sound()) throw StructureError(std::string(what) + ": " + r.summary());
  if (!r.valid()) throw LawViolation(what, r);
}

std::string arrow_text(const FinCategory& c, std::size_t global) {
  const auto& a = c.arrow(global);
  return c.arrow_name(global) + ":" + c.objects()[a.src] + "->" + c.objects()[a.dst];
}

}  // namespace

Cell2 base_embedding(const MonadOnAB& m) { return eval_pasting("(Ap)(EB)", ab_env(m)); }

ValidationReport check_side_condition(const MonadOnAB& m, SideCondition level, const ValidationOptions& opts) {
  ValidationReport report(opts);
  if (level == SideCondition::none) return report;
  try {
    PastingEnv env = ab_env(m);
    env.bind_cell("i", {"B"}, {"A", "B"}, eval_pasting("(Ap)(EB)", env));
    check_equation(report, 1, "i preserves multiplication", "i(p)", "P(iAB)(Bi)", env);
    check_equation(report, 2, "i preserves unit", "i(e)", "E", env);
    if (level == SideCondition::full) check_equation(report, 3, "right B-linearity", "P(ABi)", "Ap", env);
  } catch (const StructureError& e) {
    report.add_structural(e.what());
  }
  return report;
}

MonadOnAB warping_to_monad(const Warping& w) {
  require_valid(validate_warping(w, {1}), "warping");
  PastingEnv env = warping_env(w);
  Cell2 p = eval_pasting("(Ap)(tB)", env);
  return MonadOnAB{w.base, w.endo, SpanMonad::make(env.word_span({"A", "B"}), std::move(p), w.k)};
}

Warping monad_to_warping(const MonadOnAB& m) {
  require_valid(check_side_condition(m, SideCondition::full, {1}), "side condition");
  PastingEnv env = ab_env(m);
  return Warping{m.base, m.endo, eval_pasting("P(ABAe)", env), m.monad.unit()};
}

Wreath warping_to_wreath(const Warping& w) {
  require_valid(validate_warping(w, {1}), "warping");
  PastingEnv env = warping_env(w);
  return Wreath{w.base, w.endo, eval_pasting("t(ApA)(kBA)", env), eval_pasting("t(AeA)", env), w.k};
}

Warping wreath_to_warping(const Wreath& w) {
  require_valid(validate_wreath(w, {1}), "wreath");
  PastingEnv env = wreath_env(w);
  return Warping{w.base, w.endo, eval_pasting("(Ap)(qB)(Ad)", env), w.j};
}

MonadOnAB wreath_to_monad(const Wreath& w) {
  require_valid(validate_wreath(w, {1}), "wreath");
  PastingEnv env = wreath_env(w);
  Cell2 p = eval_pasting("(Ap)(qB)(AAp)(AdB)", env);
  return MonadOnAB{w.base, w.endo, SpanMonad::make(env.word_span({"A", "B"}), std::move(p), w.j)};
}

// ---------------------------------------------------------------------------

FinCategory kleisli_category(const MwMonad& m) {
  require_valid(validate_mw_monad(m, {1}), "mw-monad");
  const auto& c = *m.base;
  const auto& obj = c.objects();
  const std::size_t n = obj.size();
  auto T = [&](std::size_t x) { return m.object_map(x); };
  FinCategory::Builder b(obj);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) b.hom(obj[x], obj[y], c.hom(x, T(y)));
    b.identity(obj[x], c.hom(x, T(x))[m.units[x]]);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t f = 0; f < c.hom(x, T(y)).size(); ++f)
          for (std::size_t g = 0; g < c.hom(y, T(z)).size(); ++g) {
            std::size_t gf = c.compose(x, T(y), T(z), m.apply(y, z, g), f);
            b.compose(obj[x], obj[y], obj[z], c.hom(y, T(z))[g], c.hom(x, T(y))[f], c.hom(x, T(z))[gf]);
          }
  return b.build();
}

FinCategory kleisli_via_wreath(const MwMonad& m) {
  MonadOnAB mon = wreath_to_monad(warping_to_wreath(mw_to_warping(m)));
  // [x f Ty * y] <-> f
  return monad_to_category(mon.monad, [](const Path& p) { return p.entry(0); });
}

// ---------------------------------------------------------------------------

ClassicalMonad classical_monad(const Wreath& w) {
  auto T = endo_shape(*w.endo);
  if (!T || !(T->dom() == w.base.objects())) throw StructureError("wreath endo-span is not of the form T*");
  if (w.base.carrier()->arity() != 1) throw StructureError("base monad carrier is not a one-step span");
  auto base = std::make_shared<const FinCategory>(monad_to_category(w.base));
  const auto& c = *base;
  const auto& obj = c.objects();
  const std::size_t n = obj.size();
  ClassicalMonad out{base, *T, std::vector<std::size_t>(c.arrow_count()), std::vector<std::size_t>(n),
                     std::vector<std::size_t>(n)};
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const auto& arr = c.arrow(a);
    std::size_t tz = (*T)(arr.src), ty = (*T)(arr.dst);
    Path in = endo_element(*w.endo, obj[tz], obj[arr.src]).then(Path::step(obj[arr.src], c.arrow_name(a), obj[arr.dst]));
    const Path& img = w.d(in);
    out.fmap[a] = c.global(tz, ty, c.hom(tz, ty).index_of(img.entry(0)));
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::size_t ty = (*T)(y), tty = (*T)(ty);
    Path in = endo_element(*w.endo, obj[tty], obj[ty]).then(endo_element(*w.endo, obj[ty], obj[y]));
    out.mu[y] = c.hom(tty, ty).index_of(w.q(in).entry(0));
    out.eta[y] = c.hom(y, ty).index_of(w.j(Path::trivial(obj[y])).entry(0));
  }
  return out;
}

ValidationReport validate_classical_monad(const ClassicalMonad& m, const ValidationOptions& opts) {
  ValidationReport report(opts);
  const auto& c = *m.base;
  const std::size_t n = c.object_count();
  auto T = [&](std::size_t x) { return m.object_map(x); };
  if (m.fmap.size() != c.arrow_count() || m.mu.size() != n || m.eta.size() != n) {
    report.add_structural("classical monad tables are not total");
    return report;
  }
  std::vector<std::size_t> obj_map(n);
  for (std::size_t x = 0; x < n; ++x) obj_map[x] = T(x);
  FinFunctor f(m.base, m.base, obj_map, m.fmap);
  auto fr = validate_functor(f, opts);
  for (const auto& s : fr.structural()) report.add_structural("T^: " + s);
  if (!fr.structurally_sound()) return report;
  for (const auto& v : fr.violations()) report.add_violation(1, "T^ " + v.law, v.witness);
  auto eta = [&](std::size_t x) { return c.global(x, T(x), m.eta[x]); };
  auto mu = [&](std::size_t x) { return c.global(T(T(x)), T(x), m.mu[x]); };
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const auto& arr = c.arrow(a);
    if (c.compose_global(m.fmap[a], eta(arr.src)) != c.compose_global(eta(arr.dst), a))
      report.add_violation(2, "eta natural", arrow_text(c, a));
    if (c.compose_global(mu(arr.dst), m.fmap[m.fmap[a]]) != c.compose_global(m.fmap[a], mu(arr.src)))
      report.add_violation(3, "mu natural", arrow_text(c, a));
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (c.compose_global(mu(x), m.fmap[mu(x)]) != c.compose_global(mu(x), mu(T(x))))
      report.add_violation(4, "mu associative", "object " + c.objects()[x]);
    if (c.compose_global(mu(x), eta(T(x))) != c.identity_global(T(x)))
      report.add_violation(5, "mu o eta T = 1", "object " + c.objects()[x]);
    if (c.compose_global(mu(x), m.fmap[eta(x)]) != c.identity_global(T(x)))
      report.add_violation(6, "mu o T^eta = 1", "object " + c.objects()[x]);
  }
  return report;
}

// ---------------------------------------------------------------------------

ValidationReport validate_algebra(const WarpAlgebra& a, const ValidationOptions& opts) {
  ValidationReport report(opts);
  PastingEnv env;
  try {
    env = warping_env(a.warping);
    env.bind_generator("M", a.module);
    env.bind_cell("m", {"M", "B", "A"}, {"M", "B"}, a.action);
  } catch (const StructureError& e) {
    report.add_structural(e.what());
    return report;
  }
  try {
    check_equation(report, 1, "action associative", "m(MpA)(mBA)", "(Mp)(mB)(MBt)", env);
    check_equation(report, 2, "action unital", "(Mp)(mB)(MBk)", "1[MB]", env);
  } catch (const StructureError& e) {
    report.add_structural(e.what());
  }
  return report;
}

WarpAlgebra self_action(const Warping& w) { return WarpAlgebra{w, w.endo, w.t}; }

ValidationReport validate_e_family(const EFamily& e, const ValidationOptions& opts) {
  ValidationReport report(opts);
  report.absorb(validate_mw_monad(e.base, opts), "base");
  if (!report.valid()) return report;
  const auto& m = e.base;
  const auto& c = *m.base;
  const auto& obj = c.objects();
  const std::size_t n = c.object_count();
  const std::size_t a = e.object;
  auto T = [&](std::size_t x) { return m.object_map(x); };
  if (a >= n || e.maps.size() != n) {
    report.add_structural("E-family needs a valid object and one map per object");
    return report;
  }
  for (std::size_t z = 0; z < n; ++z) {
    if (e.maps[z].size() != c.hom(z, a).size()) report.add_structural("E at " + obj[z] + " is not total");
    for (auto v : e.maps[z])
      if (v >= c.hom(T(z), a).size()) report.add_structural("E at " + obj[z] + " leaves hom(T" + obj[z] + "," + obj[a] + ")");
  }
  if (!report.structurally_sound()) return report;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t f = 0; f < c.hom(w, T(u)).size(); ++f)
        for (std::size_t g = 0; g < c.hom(u, a).size(); ++g) {
          std::size_t eg = e.maps[u][g];
          std::size_t lhs = e.maps[w][c.compose(w, T(u), a, eg, f)];
          std::size_t rhs = c.compose(T(w), T(u), a, eg, m.apply(w, u, f));
          if (lhs != rhs)
            report.add_violation(1, "E(Eg o f) = Eg o Tf",
                                 "f=" + c.hom(w, T(u))[f] + ":" + obj[w] + "->" + obj[T(u)] + ", g=" + c.hom(u, a)[g] +
                                     ":" + obj[u] + "->" + obj[a]);
        }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t g = 0; g < c.hom(x, a).size(); ++g)
      if (c.compose(x, T(x), a, e.maps[x][g], m.units[x]) != g)
        report.add_violation(2, "Eg o K = g", "g=" + c.hom(x, a)[g] + ":" + obj[x] + "->" + obj[a]);
  return report;
}

EFamily algebra_as_e_family(const WarpAlgebra& alg) {
  MwMonad m = mw_view(alg.warping);
  const auto& c = *m.base;
  const auto& obj = c.objects();
  const std::size_t n = obj.size();
  const auto& mod = *alg.module;
  auto point = star_shape(mod);
  if (mod.dst().size() != 1 || !point || !(point->cod() == obj))
    throw StructureError("algebra module is not of the form a* on a one-point object");
  std::size_t a = (*point)(0);
  const Atom& pt = mod.dst()[0];
  EFamily out{m, a, std::vector<std::vector<std::size_t>>(n)};
  for (std::size_t z = 0; z < n; ++z) {
    std::size_t tz = m.object_map(z);
    for (const auto& g : c.hom(z, a)) {
      Path in = endo_element(*alg.warping.endo, obj[tz], obj[z])
                    .then(Path::step(obj[z], g, obj[a]))
                    .then(Path::step(obj[a], kStarAtom, pt));
      out.maps[z].push_back(c.hom(tz, a).index_of(alg.action(in).entry(0)));
    }
  }
  return out;
}

WarpAlgebra e_family_to_algebra(const EFamily& e) {
  Warping w = mw_to_warping(e.base);
  const auto& c = *e.base.base;
  const auto& obj = c.objects();
  SpanPtr mod = restrict_star(FinFunction(FinSet{kPointAtom}, obj, {e.object}));
  PastingEnv env = warping_env(w);
  env.bind_generator("M", mod);
  auto dom = env.word_span({"M", "B", "A"});
  auto cod = env.word_span({"M", "B"});
  Cell2 act = Cell2::from_function(dom, cod, [&](const Path& p) {
    std::size_t z = obj.index_of(p.pivot(1));
    std::size_t tz = e.base.object_map(z);
    std::size_t g = c.hom(z, e.object).index_of(p.entry(1));
    return Path({obj[tz], c.hom(tz, e.object)[e.maps[z][g]], obj[e.object], kStarAtom, kPointAtom});
  });
  return WarpAlgebra{std::move(w), std::move(mod), std::move(act)};
}

ValidationReport validate_em_algebra(const EmAlgebra& a, const ValidationOptions& opts) {
  ValidationReport report(opts);
  const auto& m = a.monad;
  const auto& c = *m.base;
  const std::size_t x = a.object;
  if (x >= c.object_count()) {
    report.add_structural("algebra object is not an object of the base");
    return report;
  }
  std::size_t tx = m.object_map(x), ttx = m.object_map(tx);
  if (a.action >= c.hom(tx, x).size()) {
    report.add_structural("action is not an arrow T" + c.objects()[x] + " -> " + c.objects()[x]);
    return report;
  }
  std::size_t alpha = c.global(tx, x, a.action);
  std::size_t eta = c.global(x, tx, m.eta[x]);
  std::size_t mu = c.global(ttx, tx, m.mu[x]);
  if (c.compose_global(alpha, eta) != c.identity_global(x))
    report.add_violation(1, "alpha o eta = 1", "alpha=" + c.arrow_name(alpha));
  if (c.compose_global(alpha, mu) != c.compose_global(alpha, m.fmap[alpha]))
    report.add_violation(2, "alpha o mu = alpha o T^alpha", "alpha=" + c.arrow_name(alpha));
  return report;
}

EmAlgebra algebra_to_em_algebra(const EFamily& e) {
  require_valid(validate_e_family(e, {1}), "E-family");
  ClassicalMonad cm = classical_monad(warping_to_wreath(mw_to_warping(e.base)));
  const auto& c = *e.base.base;
  return EmAlgebra{std::move(cm), e.object, e.maps[e.object][c.identity(e.object)]};
}

EFamily em_algebra_to_e_family(const EmAlgebra& a, const MwMonad& base) {
  const auto& c = *base.base;
  const std::size_t n = c.object_count();
  const std::size_t x = a.object;
  const std::size_t tx = a.monad.object_map(x);
  EFamily out{base, x, std::vector<std::vector<std::size_t>>(n)};
  std::size_t alpha = c.global(tx, x, a.action);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t g = 0; g < c.hom(z, x).size(); ++g) {
      std::size_t r = c.compose_global(alpha, a.monad.fmap[c.global(z, x, g)]);
      out.maps[z].push_back(c.arrow(r).index);
    }
  return out;
}

}  // namespace warp
