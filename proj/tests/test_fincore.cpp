#include <doctest.h>

#include "support.hpp"

using namespace warp;
using testing::p1;
using testing::z2;

TEST_CASE("finset keeps atoms sorted and unique positions") {
  FinSet s{"b", "a", "c"};
  CHECK(s.atoms() == std::vector<Atom>{"a", "b", "c"});
  CHECK(s.index_of("c") == 2);
  CHECK_FALSE(s.contains("d"));
  CHECK_THROWS_AS(s.index_of("d"), StructureError);
  CHECK(FinSet{"x", "y"} == FinSet{"y", "x"});
}

TEST_CASE("function enumerator visits b^a functions once") {
  FinSet a{"1", "2", "3"}, b{"p", "q"};
  FunctionEnumerator e(a, b);
  CHECK(e.total() == 8);
  std::vector<FinFunction> seen;
  while (auto f = e.next()) {
    for (const auto& g : seen) CHECK_FALSE(g == *f);
    seen.push_back(*f);
  }
  CHECK(seen.size() == 8);
  CHECK(enumerate_functions(FinSet{}, b).size() == 1);
  CHECK(enumerate_functions(a, FinSet{}).empty());
}

TEST_CASE("function composition") {
  FinSet a{"1", "2"}, b{"p", "q"}, c{"x"};
  auto f = FinFunction::from_atoms(a, b, {{"1", "q"}, {"2", "p"}});
  auto g = FinFunction::from_atoms(b, c, {{"p", "x"}, {"q", "x"}});
  CHECK(f("1") == "q");
  CHECK(f.then(g)("2") == "x");
  CHECK(f.then(FinFunction::identity(b)) == f);
}

TEST_CASE("hand-built categories validate") {
  CHECK(validate_category(*z2()).valid());
  CHECK(validate_category(*p1()).valid());
  CHECK(validate_category(discrete_category(FinSet{"a", "b"})).valid());
  auto d = discrete_category(FinSet{"a"});
  CHECK(d.hom("a", "a").atoms() == std::vector<Atom>{"1_a"});
}

TEST_CASE("broken composition is caught with a witness") {
  // 1 s = 1 breaks the unit law
  FinCategory::Builder b(FinSet{"o"});
  b.hom("o", "o", FinSet{"1", "s"}).identity("o", "1");
  b.compose("o", "o", "o", "1", "1", "1").compose("o", "o", "o", "1", "s", "1");
  b.compose("o", "o", "o", "s", "1", "s").compose("o", "o", "o", "s", "s", "1");
  auto r = validate_category(b.build());
  CHECK_FALSE(r.valid());
  REQUIRE_FALSE(r.violations().empty());
  CHECK_FALSE(r.violations().front().witness.empty());
}

TEST_CASE("holes in the composition table are structural") {
  FinCategory::Builder b(FinSet{"o"});
  b.hom("o", "o", FinSet{"1", "s"}).identity("o", "1");
  b.compose("o", "o", "o", "1", "1", "1");
  auto r = validate_category(b.build());
  CHECK_FALSE(r.structurally_sound());
}

TEST_CASE("functors between small categories") {
  // Z/2 -> Z/2: s goes to 1 or to s
  CHECK(enumerate_functors(z2(), z2()).size() == 2);
  // P1 -> P1: identity, and the two constant functors
  CHECK(enumerate_functors(p1(), p1()).size() == 3);
  auto id = FinFunctor::identity(z2());
  CHECK(validate_functor(id).valid());
  // s -> 1, 1 -> s is not a functor (identity not preserved)
  FinFunctor bad(z2(), z2(), {0}, {1, 0});
  CHECK_FALSE(validate_functor(bad).valid());
}

TEST_CASE("natural transformations on Z/2") {
  auto id = FinFunctor::identity(z2());
  // every arrow of a commutative group is a component of id => id
  CHECK(validate_nat_trans(FinNatTrans(id, id, {0})).valid());
  CHECK(validate_nat_trans(FinNatTrans(id, id, {1})).valid());
  FinFunctor trivial(z2(), z2(), {0}, {0, 0});
  // id => trivial at s would need s c = c 1 for the component c
  CHECK_FALSE(validate_nat_trans(FinNatTrans(id, trivial, {0})).valid());
}

TEST_CASE("category structures on a two-element monoid carrier") {
  // identity is one of the two arrows; the other squares to either: 4
  auto cats = enumerate_categories(FinSet{"o"}, {FinSet{"a", "b"}}, 1000);
  CHECK(cats.size() == 4);
  for (const auto& c : cats) CHECK(validate_category(c).valid());
  CHECK_THROWS_AS(enumerate_categories(FinSet{"o"}, {FinSet{"a", "b", "c"}}, 10), LimitExceeded);
}
