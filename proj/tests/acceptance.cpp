// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "warp/cli.hpp"
#include "warp/correspond.hpp"
#include "warp/enumerate.hpp"
#include "warp/io.hpp"
#include "warp/skew.hpp"

using namespace warp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

const std::string kFixtures = WARP_FIXTURE_DIR;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json fixture(const std::string& name) { return parse_document(read_file(kFixtures + "/" + name)); }

CategoryPtr fixture_category(const std::string& name) {
  return std::make_shared<const FinCategory>(category_from_json(fixture(name)));
}

struct Base {
  std::string name;
  CategoryPtr category;
};

std::vector<Base> bases() { return {{"Z/2", fixture_category("w1_base.json")}, {"P1", fixture_category("p1_base.json")}}; }

std::string map_label(const FinFunction& T) {
  std::string out;
  for (std::size_t x = 0; x < T.dom().size(); ++x) out += (out.empty() ? "" : ",") + T.dom()[x] + "->" + T.cod()[T(x)];
  return out;
}

template <class T>
std::size_t position(const std::vector<T>& xs, const T& x) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (xs[i] == x) return i;
  return npos;
}

// Injective into `to`, and onto since the sizes agree.
template <class A, class B, class F>
void check_bijection(Outcome& o, const std::string& where, const std::vector<A>& from, const std::vector<B>& to, F f) {
  o.require(from.size() == to.size(), where + ": " + std::to_string(from.size()) + " vs " + std::to_string(to.size()));
  std::vector<bool> hit(to.size(), false);
  for (const auto& a : from) {
    auto i = position(to, f(a));
    o.require(i != npos, where + ": image not among the enumerated instances");
    if (i == npos) continue;
    o.require(!hit[i], where + ": two instances share an image");
    hit[i] = true;
  }
}

Outcome criterion1() {
  Outcome o;
  std::string counts;
  for (const auto& b : bases()) {
    auto base = category_to_monad(*b.category);
    std::size_t nw = 0, nm = 0;
    for (const auto& T : all_object_maps(b.category->objects())) {
      auto where = b.name + " T=" + map_label(T);
      auto A = restrict_star(T);
      auto ws = enumerate_warpings(base, A).instances;
      auto ms = enumerate_monads_on_ab(base, A, SideCondition::monoid_map).instances;
      nw += ws.size();
      nm += ms.size();
      try {
        check_bijection(o, where, ws, ms, warping_to_monad);
        check_bijection(o, where, ms, ws, monad_to_warping);
        for (const auto& w : ws) o.require(monad_to_warping(warping_to_monad(w)) == w, where + ": warping roundtrip");
        for (const auto& m : ms) o.require(warping_to_monad(monad_to_warping(m)) == m, where + ": monad roundtrip");
      } catch (const std::exception& e) {
        o.require(false, where + ": " + e.what());
      }
    }
    counts += (counts.empty() ? "" : "; ") + b.name + " " + std::to_string(nw) + " warpings, " +
              std::to_string(nm) + " monads on AB";
  }
  o.detail = counts;
  return o;
}

Outcome criterion2and3(bool paths) {
  Outcome o;
  std::string counts;
  std::size_t checked = 0;
  for (const auto& b : bases()) {
    auto base = category_to_monad(*b.category);
    std::size_t nw = 0, nr = 0;
    for (const auto& T : all_object_maps(b.category->objects())) {
      auto where = b.name + " T=" + map_label(T);
      auto A = restrict_star(T);
      auto ws = enumerate_warpings(base, A).instances;
      auto rs = enumerate_wreaths(base, A).instances;
      nw += ws.size();
      nr += rs.size();
      if (paths) {
        for (const auto& r : rs) {
          ++checked;
          o.require(wreath_to_monad(r) == warping_to_monad(wreath_to_warping(r)), where + ": paths differ");
        }
        continue;
      }
      check_bijection(o, where, ws, rs, warping_to_wreath);
      check_bijection(o, where, rs, ws, wreath_to_warping);
      for (const auto& w : ws) o.require(wreath_to_warping(warping_to_wreath(w)) == w, where + ": warping roundtrip");
      for (const auto& r : rs) o.require(warping_to_wreath(wreath_to_warping(r)) == r, where + ": wreath roundtrip");
    }
    counts += (counts.empty() ? "" : "; ") + b.name + " " + std::to_string(nw) + " warpings, " +
              std::to_string(nr) + " wreaths";
  }
  o.detail = paths ? std::to_string(checked) + " wreaths, both paths agree" : counts;
  return o;
}

std::vector<MwMonad> all_mw(const CategoryPtr& c) {
  std::vector<MwMonad> out;
  for (const auto& T : all_object_maps(c->objects()))
    for (auto& m : enumerate_mw_monads(c, T).instances) out.push_back(std::move(m));
  return out;
}

Outcome criterion4() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& b : bases())
    for (const auto& m : all_mw(b.category)) {
      ++n;
      auto where = b.name + " T=" + map_label(m.object_map);
      auto k = kleisli_category(m);
      o.require(validate_category(k).valid(), where + ": Kleisli category invalid");
      o.require(k == kleisli_via_wreath(m), where + ": differs from the wreath route");
    }
  o.detail = std::to_string(n) + " mw-monads";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::string counts;
  for (const auto& [name, m] : {std::pair{std::string("W1"), mw_monad_from_json(fixture("w1_mw_monad.json"))},
                                std::pair{std::string("P1"), mw_monad_from_json(fixture("p1_mw_monad.json"))}}) {
    auto cm = classical_monad(warping_to_wreath(mw_to_warping(m)));
    const auto& obj = m.base->objects();
    for (std::size_t a = 0; a < obj.size(); ++a) {
      auto where = name + " at " + obj[a];
      auto es = enumerate_e_families(m, a).instances;
      auto ems = enumerate_em_algebras(cm, a).instances;
      counts += (counts.empty() ? "" : "; ") + where + " " + std::to_string(es.size()) + "/" + std::to_string(ems.size());
      o.require(es.size() == ems.size(), where + ": counts differ");
      for (const auto& e : es) {
        auto alg = algebra_to_em_algebra(e);
        o.require(validate_em_algebra(alg).valid(), where + ": translated action invalid");
        o.require(em_algebra_to_e_family(alg, m) == e, where + ": E-family roundtrip");
        o.require(algebra_as_e_family(e_family_to_algebra(e)) == e, where + ": algebra roundtrip");
      }
      for (const auto& em : ems) {
        auto e = em_algebra_to_e_family(em, m);
        o.require(validate_e_family(e).valid(), where + ": translated E-family invalid");
        o.require(algebra_to_em_algebra(e).action == em.action, where + ": action roundtrip");
      }
    }
  }
  o.detail = "E-families/EM algebras: " + counts;
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<std::pair<std::string, SkewWarping>> cases;
  cases.emplace_back("S1", skew_warping_from_json(fixture("s1_skew_warping.json")));
  cases.emplace_back("S2", skew_warping_from_json(fixture("s2_skew_warping.json")));
  for (const char* f : {"s1_skew_bicategory.json", "s2_skew_bicategory.json"}) {
    auto s = skew_bicategory_from_json(fixture(f));
    cases.emplace_back(std::string("identity on ") + f, identity_skew_warping(s));
    for (auto& w : skew_warping_families(identity_skew_warping(s)).valid)
      cases.emplace_back(std::string("family member on ") + f, std::move(w));
  }
  for (const auto& b : bases())
    for (const auto& m : all_mw(b.category))
      cases.emplace_back("discrete " + b.name + " T=" + map_label(m.object_map), discrete_skew_warping(m));
  for (const auto& [where, w] : cases) {
    o.require(validate_skew_warping(w).valid(), where + ": input warping invalid");
    auto k = skew_kleisli(w);
    auto r = validate_skew_bicategory(k);
    o.require(r.valid(), where + ": " + r.summary());
  }
  o.detail = std::to_string(cases.size()) + " skew warpings";
  return o;
}

// Random spans over small sets; every entry holds up to `most` one-step
// paths.
SpanPtr random_span(std::mt19937& rng, const FinSet& x, const FinSet& y, const std::string& tag,
                    const Span* at_least = nullptr) {
  std::map<std::pair<Atom, Atom>, std::vector<Atom>> atoms;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      std::size_t lo = at_least && !at_least->entry(i, j).empty() ? 1 : 0;
      std::size_t n = std::uniform_int_distribution<std::size_t>(lo, 2)(rng);
      auto& v = atoms[{x[i], y[j]}];
      for (std::size_t k = 0; k < n; ++k) v.push_back(tag + std::to_string(i) + std::to_string(j) + std::to_string(k));
    }
  return generator_span(x, y, atoms);
}

Cell2 random_cell(std::mt19937& rng, const SpanPtr& dom, const SpanPtr& cod) {
  std::vector<std::vector<std::size_t>> comps(dom->entries().size());
  for (std::size_t e = 0; e < comps.size(); ++e) {
    auto n = cod->entries()[e].size();
    for (std::size_t i = 0; i < dom->entries()[e].size(); ++i)
      comps[e].push_back(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  }
  return Cell2(dom, cod, comps);
}

FinSet random_set(std::mt19937& rng, const std::string& tag) {
  std::vector<Atom> atoms;
  auto n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(tag + std::to_string(i));
  return FinSet(atoms);
}

bool rejects(const ValidationReport& r) {
  return !r.valid() && !r.violations().empty() && !r.violations().front().witness.empty();
}

Cell2 flip(const Cell2& c, std::size_t entry, std::size_t i) {
  auto comps = c.components();
  auto n = c.cod().entries()[entry].size();
  comps[entry][i] = (comps[entry][i] + 1) % n;
  return Cell2(c.dom_ptr(), c.cod_ptr(), comps);
}

// First (entry, index) whose codomain entry has a choice.
std::pair<std::size_t, std::size_t> flippable(const Cell2& c) {
  for (std::size_t e = 0; e < c.components().size(); ++e)
    if (!c.components()[e].empty() && c.cod().entries()[e].size() > 1) return {e, 0};
  throw std::logic_error("cell has no alternative values");
}

Cell2 flip_first(const Cell2& c) {
  auto [e, i] = flippable(c);
  return flip(c, e, i);
}

std::vector<std::pair<std::string, ValidationReport>> mutations() {
  std::vector<std::pair<std::string, ValidationReport>> out;
  auto z = fixture_category("w1_base.json");

  {
    auto comp = z->composition_tables();
    comp[0][0 * 2 + 1] = 0;  // 1 o s = 1
    out.emplace_back("category composition", validate_category(
                                                 FinCategory(z->objects(), z->homs(), comp, z->identities())));
  }
  {
    FinFunctor f(z, z, {0}, {1, 1});  // identity sent to s
    out.emplace_back("functor arrow map", validate_functor(f));
  }
  auto base = category_to_monad(*z);
  {
    out.emplace_back("monad multiplication",
                     SpanMonad::check(base.carrier(), flip_first(base.mult()), base.unit()));
    out.emplace_back("monad unit", SpanMonad::check(base.carrier(), base.mult(), flip_first(base.unit())));
  }
  auto mw = mw_monad_from_json(fixture("w1_mw_monad.json"));
  {
    auto m = mw;
    m.units[0] = 1;
    out.emplace_back("mw-monad unit", validate_mw_monad(m));
    m = mw;
    m.ext[0][1] = 0;
    out.emplace_back("mw-monad extension", validate_mw_monad(m));
  }
  auto w = warping_from_json(fixture("w1_warping.json"));
  {
    auto m = w;
    m.t = flip_first(w.t);
    out.emplace_back("warping t", validate_warping(m));
    m = w;
    m.k = flip_first(w.k);
    out.emplace_back("warping k", validate_warping(m));
  }
  auto r = warping_to_wreath(w);
  {
    auto m = r;
    m.d = flip_first(r.d);
    out.emplace_back("wreath d", validate_wreath(m));
    m = r;
    m.q = flip_first(r.q);
    out.emplace_back("wreath q", validate_wreath(m));
    m = r;
    m.j = flip_first(r.j);
    out.emplace_back("wreath j", validate_wreath(m));
  }
  {
    auto a = algebra_from_json(fixture("w1_algebra.json"));
    a.action = flip_first(a.action);
    out.emplace_back("algebra action", validate_algebra(a));
  }
  {
    auto e = enumerate_e_families(mw, 0).instances.at(0);
    e.maps[0][0] = 1;
    out.emplace_back("E-family", validate_e_family(e));
    auto em = algebra_to_em_algebra(enumerate_e_families(mw, 0).instances.at(0));
    em.action = 1;
    out.emplace_back("Eilenberg-Moore action", validate_em_algebra(em));
    auto cm = classical_monad(r);
    cm.mu[0] = 1;
    out.emplace_back("classical multiplication", validate_classical_monad(cm));
  }
  {
    auto s = skew_bicategory_from_json(fixture("s2_skew_bicategory.json"));
    auto m = s;
    m.alpha[{0, 0, 0, 0, 1, 0, 1}] = 3;
    out.emplace_back("skew alpha", validate_skew_bicategory(m));
    m = s;
    m.lambda[{0, 0, 1}] = 3;
    out.emplace_back("skew lambda", validate_skew_bicategory(m));
    auto sw = skew_warping_from_json(fixture("s2_skew_warping.json"));
    auto mw2 = sw;
    mw2.nu[{0, 0, 0, 0, 1}] = 3;
    out.emplace_back("skew warping nu", validate_skew_warping(mw2));
    auto sa = skew_algebra_from_json(fixture("s2_skew_algebra.json"));
    sa.cell_nu[{0, 0, 0, 1}] = 3;
    out.emplace_back("skew algebra cell", validate_skew_algebra(sa));
  }
  return out;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937 rng(20240607);
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    auto X = random_set(rng, "x"), Y = random_set(rng, "y"), Z = random_set(rng, "z"), W = random_set(rng, "w");
    auto n = random_span(rng, X, Y, "n"), m = random_span(rng, Y, Z, "m"), p = random_span(rng, Z, W, "p");
    auto where = "trial " + std::to_string(t);
    o.require(*compose_spans(*compose_spans(*p, *m), *n) == *compose_spans(*p, *compose_spans(*m, *n)),
              where + ": composition not associative");
    // a: m => m2, b: n => n2
    auto m2 = random_span(rng, Y, Z, "M", m.get()), n2 = random_span(rng, X, Y, "N", n.get());
    auto a = random_cell(rng, m, m2), b = random_cell(rng, n, n2);
    auto first_b = vcompose(whisker(nullptr, a, n2), whisker(m, b, nullptr));
    auto first_a = vcompose(whisker(m2, b, nullptr), whisker(nullptr, a, n));
    o.require(cells_equal(first_b, first_a).equal, where + ": interchange fails");
    o.require(whisker(p, whisker(m, b, nullptr), nullptr) == whisker(compose_spans(*p, *m), b, nullptr),
              where + ": whiskering not associative");
  }
  std::size_t rejected = 0;
  auto ms = mutations();
  for (const auto& [name, report] : ms) {
    bool ok = rejects(report);
    rejected += ok;
    o.require(ok, "mutation '" + name + "' not rejected with a witness");
  }
  o.detail = std::to_string(trials) + " random triples; " + std::to_string(rejected) + "/" +
             std::to_string(ms.size()) + " mutations rejected";
  o.require(ms.size() >= 10, "fewer than 10 mutations");
  return o;
}

int expected_exit(const std::string& name) {
  if (name.rfind("malformed/", 0) == 0) return 2;
  if (name.find("mutated") != std::string::npos || name.find("_k_s") != std::string::npos) return 1;
  return 0;
}

Outcome criterion8() {
  Outcome o;
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(kFixtures))
    if (e.path().extension() == ".json")
      files.push_back(std::filesystem::relative(e.path(), kFixtures).generic_string());
  std::sort(files.begin(), files.end());
  std::size_t canonical = 0;
  std::map<int, std::size_t> by_code;
  for (const auto& f : files) {
    auto path = kFixtures + "/" + f;
    int want = expected_exit(f);
    if (want != 2) {
      auto text = read_file(path);
      bool same = emit(parse_document(text)) == text;
      canonical += same;
      o.require(same, f + ": emit(parse) is not the identity");
    }
    auto run = run_cli({"validate", path});
    o.require(run.exit_code == want,
              f + ": exit " + std::to_string(run.exit_code) + ", expected " + std::to_string(want));
    o.require(run_cli({"validate", path}).out == run.out, f + ": report not reproducible");
    ++by_code[run.exit_code];
  }
  o.detail = std::to_string(canonical) + " canonical fixtures; exits 0/1/2: " + std::to_string(by_code[0]) + "/" +
             std::to_string(by_code[1]) + "/" + std::to_string(by_code[2]);
  o.require(by_code[0] > 0 && by_code[1] > 0 && by_code[2] > 0, "exit-code classes not all exercised");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "warpings = monads on AB", 5, criterion1},
      {2, "warpings = wreaths", 5, [] { return criterion2and3(false); }},
      {3, "wreath -> monad path independence", 5, [] { return criterion2and3(true); }},
      {4, "Kleisli category", 5, criterion4},
      {5, "E-families = Eilenberg-Moore algebras", 5, criterion5},
      {6, "skew Kleisli", 10, criterion6},
      {7, "engine soundness", 10, criterion7},
      {8, "CLI determinism", 60, criterion8},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < c.budget_s, "took longer than " + std::to_string(c.budget_s) + " s");
    all = all && o.pass;
    std::printf("criterion %d %s: %s (%.3f s) %s\n", c.number, o.pass ? "PASS" : "FAIL", c.title, secs,
                o.detail.c_str());
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
  }
  return all ? 0 : 1;
}
