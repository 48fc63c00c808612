#include "warp/enumerate.hpp"

#include <map>

namespace warp {

namespace {

std::size_t saturating_product(const std::vector<std::size_t>& ranges) {
  std::size_t total = 1;
  for (auto r : ranges) {
    if (r == 0) return 0;
    if (total > npos / r) return npos;
    total *= r;
  }
  return total;
}

void check_limit(std::size_t candidates, const EnumerationLimits& limits, const char* what) {
  if (candidates > limits.max_candidates)
    throw LimitExceeded(std::string(what) + ": " +
                        (candidates == npos ? std::string("too many") : std::to_string(candidates)) +
                        " candidates exceed the candidate limit of " + std::to_string(limits.max_candidates));
}

// Calls visit(digits) for every assignment digits[i] < ranges[i].
template <class F>
void odometer(const std::vector<std::size_t>& ranges, F&& visit) {
  for (auto r : ranges)
    if (r == 0) return;
  std::vector<std::size_t> digit(ranges.size(), 0);
  for (;;) {
    visit(digit);
    std::size_t i = 0;
    while (i < ranges.size()) {
      if (++digit[i] < ranges[i]) break;
      digit[i] = 0;
      ++i;
    }
    if (i == ranges.size()) return;
  }
}

std::vector<Cell2> all_cells(const SpanPtr& dom, const SpanPtr& cod) {
  std::vector<Cell2> out;
  CellEnumerator en(dom, cod);
  while (auto c = en.next()) out.push_back(std::move(*c));
  return out;
}

bool holds(const PastingEnv& env, const std::vector<AxiomEquation>& axioms, std::initializer_list<int> which) {
  for (int n : which) {
    const auto& ax = axioms.at(static_cast<std::size_t>(n - 1));
    if (!cells_equal(eval_pasting(ax.lhs, env), eval_pasting(ax.rhs, env))) return false;
  }
  return true;
}

}  // namespace

std::vector<FinFunction> all_object_maps(const FinSet& objects) { return enumerate_functions(objects, objects); }

Enumeration<MwMonad> enumerate_mw_monads(const CategoryPtr& c, const FinFunction& T,
                                         const EnumerationLimits& limits) {
  const std::size_t n = c->object_count();
  std::vector<std::size_t> ranges;
  for (std::size_t x = 0; x < n; ++x) ranges.push_back(c->hom(x, T(x)).size());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t f = 0; f < c->hom(x, T(y)).size(); ++f) ranges.push_back(c->hom(T(x), T(y)).size());
  Enumeration<MwMonad> out;
  out.candidates = saturating_product(ranges);
  check_limit(out.candidates, limits, "mw-monad enumeration");
  odometer(ranges, [&](const std::vector<std::size_t>& d) {
    MwMonad m{c, T, std::vector<std::vector<std::size_t>>(n * n), std::vector<std::size_t>(d.begin(), d.begin() + n)};
    std::size_t i = n;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t f = 0; f < c->hom(x, T(y)).size(); ++f) m.ext[x * n + y].push_back(d[i++]);
    if (validate_mw_monad(m, {1}).valid()) out.instances.push_back(std::move(m));
  });
  return out;
}

Enumeration<Warping> enumerate_warpings(const SpanMonad& base, const SpanPtr& endo, const EnumerationLimits& limits) {
  PastingEnv env = base_env(base, endo);
  auto aba = env.word_span({"A", "B", "A"});
  auto ab = env.word_span({"A", "B"});
  auto one = identity_span(base.objects());
  CellEnumerator ts(aba, ab), ks(one, ab);
  Enumeration<Warping> out;
  out.candidates = saturating_product({ts.total(), ks.total()});
  check_limit(out.candidates, limits, "warping enumeration");
  auto kcells = all_cells(one, ab);
  auto tcells = all_cells(aba, ab);
  for (const auto& k : kcells)
    for (const auto& t : tcells) {
      Warping w{base, endo, t, k};
      if (validate_warping(w, {1}).valid()) out.instances.push_back(std::move(w));
    }
  return out;
}

Enumeration<Wreath> enumerate_wreaths(const SpanMonad& base, const SpanPtr& endo, const EnumerationLimits& limits) {
  PastingEnv env = base_env(base, endo);
  auto ba = env.word_span({"B", "A"});
  auto aa = env.word_span({"A", "A"});
  auto ab = env.word_span({"A", "B"});
  auto one = identity_span(base.objects());
  CellEnumerator ds(ba, ab), qs(aa, ab), js(one, ab);
  Enumeration<Wreath> out;
  out.candidates = saturating_product({ds.total(), qs.total(), js.total()});
  check_limit(out.candidates, limits, "wreath enumeration");
  const auto& axioms = wreath_axioms();
  auto qcells = all_cells(aa, ab);
  auto jcells = all_cells(one, ab);
  CellEnumerator den(ba, ab);
  while (auto d = den.next()) {
    PastingEnv ed = env;
    ed.bind_cell("d", {"B", "A"}, {"A", "B"}, *d);
    if (!holds(ed, axioms, {1, 2})) continue;
    for (const auto& j : jcells) {
      PastingEnv ej = ed;
      ej.bind_cell("j", {}, {"A", "B"}, j);
      if (!holds(ej, axioms, {4})) continue;
      for (const auto& q : qcells) {
        PastingEnv eq = ej;
        eq.bind_cell("q", {"A", "A"}, {"A", "B"}, q);
        if (!holds(eq, axioms, {3, 5, 6, 7})) continue;
        out.instances.push_back(Wreath{base, endo, *d, q, j});
      }
    }
  }
  return out;
}

Enumeration<MonadOnAB> enumerate_monads_on_ab(const SpanMonad& base, const SpanPtr& endo, SideCondition level,
                                              const EnumerationLimits& limits) {
  PastingEnv env = base_env(base, endo);
  auto ab = env.word_span({"A", "B"});
  auto abab = env.word_span({"A", "B", "A", "B"});
  const auto& obj = base.objects();
  const std::size_t n = obj.size();
  std::vector<FinSet> homs;
  std::vector<std::map<Atom, Path>> paths(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<Atom> names;
      for (const auto& p : ab->entry(x, y)) {
        names.push_back(carrier_atom(p));
        paths[x * n + y].emplace(names.back(), p);
      }
      homs.emplace_back(std::move(names));
    }
  auto cats = enumerate_categories(obj, homs, limits.max_candidates);
  Enumeration<MonadOnAB> out;
  out.candidates = cats.size();
  const std::size_t r = ab->arity();
  for (const auto& c : cats) {
    Cell2 p = Cell2::from_function(abab, ab, [&](const Path& path) {
      Path right = path.slice(0, r);
      Path left = path.slice(r, r);
      std::size_t x = obj.index_of(right.source()), z = obj.index_of(right.target()), y = obj.index_of(left.target());
      std::size_t f = c.hom(x, z).index_of(carrier_atom(right));
      std::size_t g = c.hom(z, y).index_of(carrier_atom(left));
      return paths[x * n + y].at(c.hom(x, y)[c.compose(x, z, y, g, f)]);
    });
    Cell2 e = Cell2::from_function(identity_span(obj), ab, [&](const Path& path) {
      std::size_t x = obj.index_of(path.source());
      return paths[x * n + x].at(c.hom(x, x)[c.identity(x)]);
    });
    MonadOnAB m{base, endo, SpanMonad::make(ab, std::move(p), std::move(e))};
    if (check_side_condition(m, level, {1}).valid()) out.instances.push_back(std::move(m));
  }
  return out;
}

Enumeration<EFamily> enumerate_e_families(const MwMonad& m, std::size_t a, const EnumerationLimits& limits) {
  const auto& c = *m.base;
  const std::size_t n = c.object_count();
  std::vector<std::size_t> ranges;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t g = 0; g < c.hom(z, a).size(); ++g) ranges.push_back(c.hom(m.object_map(z), a).size());
  Enumeration<EFamily> out;
  out.candidates = saturating_product(ranges);
  check_limit(out.candidates, limits, "E-family enumeration");
  odometer(ranges, [&](const std::vector<std::size_t>& d) {
    EFamily e{m, a, std::vector<std::vector<std::size_t>>(n)};
    std::size_t i = 0;
    for (std::size_t z = 0; z < n; ++z)
      for (std::size_t g = 0; g < c.hom(z, a).size(); ++g) e.maps[z].push_back(d[i++]);
    if (validate_e_family(e, {1}).valid()) out.instances.push_back(std::move(e));
  });
  return out;
}

Enumeration<EmAlgebra> enumerate_em_algebras(const ClassicalMonad& m, std::size_t a) {
  Enumeration<EmAlgebra> out;
  const auto& c = *m.base;
  const std::size_t n = c.hom(m.object_map(a), a).size();
  out.candidates = n;
  for (std::size_t i = 0; i < n; ++i) {
    EmAlgebra alg{m, a, i};
    if (validate_em_algebra(alg, {1}).valid()) out.instances.push_back(std::move(alg));
  }
  return out;
}

}  // namespace warp
