#include <doctest.h>

#include "support.hpp"
#include "warp/pasting.hpp"

using namespace warp;

namespace {

FinSet X{"x", "y"};

SpanPtr sample(const std::string& tag) {
  return generator_span(X, X, {{{"x", "x"}, {tag + "1"}}, {{"x", "y"}, {tag + "2", tag + "3"}}, {{"y", "x"}, {tag + "4"}}});
}

}  // namespace

TEST_CASE("composition counts by the matrix formula") {
  auto m = sample("m"), n = sample("n");
  auto mn = compose_spans(*m, *n);
  // (mn)(x,x) = m(x,x) n(x,x) + m(y,x) n(x,y) = 1 + 2
  CHECK(mn->entry("x", "x").size() == 3);
  // (mn)(x,y) = m(x,y) n(x,x) = 2
  CHECK(mn->entry("x", "y").size() == 2);
  CHECK(mn->entry("y", "y").size() == 2);
  CHECK(mn->arity() == 2);
  // n applied first
  const auto& p = mn->entry("x", "y").front();
  CHECK(p.entry(0).front() == 'n');
  CHECK(p.entry(1).front() == 'm');
}

TEST_CASE("identity spans are strict units") {
  auto m = sample("m");
  auto id = identity_span(X);
  CHECK(*compose_spans(*id, *m) == *m);
  CHECK(*compose_spans(*m, *id) == *m);
}

TEST_CASE("restriction along a function") {
  FinSet d{"a", "b"};
  auto f = FinFunction::from_atoms(d, X, {{"a", "y"}, {"b", "y"}});
  auto s = restrict_star(f);
  CHECK(s->src() == X);
  CHECK(s->dst() == d);
  CHECK(s->entry("y", "a").size() == 1);
  CHECK(s->entry("x", "a").empty());
  CHECK(s->entry("y", "b").front().entry(0) == kStarAtom);
}

TEST_CASE("cells, vertical composition and whiskering") {
  auto m = sample("m");
  auto swap = Cell2::from_function(m, m, [&](const Path& p) {
    const auto& e = m->entry(p.source(), p.target());
    return e.size() == 2 ? (p == e[0] ? e[1] : e[0]) : p;
  });
  CHECK(vcompose(swap, swap) == Cell2::identity(m));
  CHECK_FALSE(cells_equal(swap, Cell2::identity(m)));
  CHECK_FALSE(cells_equal(swap, Cell2::identity(m)).witness.empty());
  auto n = sample("n");
  auto w = whisker(n, swap, nullptr);
  CHECK(w.dom() == *compose_spans(*n, *m));
  CHECK(vcompose(w, w) == Cell2::identity(w.dom_ptr()));
}

TEST_CASE("cell enumeration counts functions entry by entry") {
  auto m = sample("m");
  CellEnumerator e(m, m);
  // 1^1 * 2^2 * 1^1
  CHECK(e.total() == 4);
  std::size_t n = 0;
  while (e.next()) ++n;
  CHECK(n == 4);
  auto empty = generator_span(X, X, {});
  CHECK(CellEnumerator(m, empty).total() == 0);
}

TEST_CASE("pasting parser reads right to left") {
  auto c = testing::z2();
  auto base = category_to_monad(*c);
  auto env = base_env(base, identity_span(base.objects()));
  auto e = parse_pasting("p(pB)", env);
  auto [dom, cod] = boundary(*e, env);
  CHECK(word_str(dom) == "BBB");
  CHECK(word_str(cod) == "B");
  CHECK(eval_pasting("p(pB)", env) == eval_pasting("p(Bp)", env));
  CHECK_THROWS_AS(eval_pasting("p(p)", env), PastingError);
  CHECK_THROWS_AS(eval_pasting("p(eBB)", env), PastingError);
  ValidationReport r;
  CHECK(check_equation(r, 1, "assoc", "p(pB)", "p(Bp)", env));
  CHECK(r.valid());
}
