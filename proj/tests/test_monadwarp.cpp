#include <doctest.h>

#include "support.hpp"

using namespace warp;
using testing::count_mw_by_hand;
using testing::idem;
using testing::p1;
using testing::z2;

TEST_CASE("categories and monads in Span agree") {
  for (const auto& c : {z2(), idem(), p1()}) {
    auto m = category_to_monad(*c);
    CHECK(SpanMonad::check(m.carrier(), m.mult(), m.unit()).valid());
    CHECK(monad_to_category(m) == *c);
  }
}

TEST_CASE("a non-associative multiplication is not a monad") {
  auto m = category_to_monad(*z2());
  // send every composite to the identity
  auto one = m.carrier()->entry(0, 0);
  auto mult = Cell2::from_function(m.mult().dom_ptr(), m.carrier(), [&](const Path&) {
    return *std::find_if(one.begin(), one.end(), [](const Path& p) { return p.entry(0) == "1"; });
  });
  auto r = SpanMonad::check(m.carrier(), mult, m.unit());
  CHECK_FALSE(r.valid());
  CHECK_THROWS_AS(SpanMonad::make(m.carrier(), mult, m.unit()), LawViolation);
}

TEST_CASE("identity structures are valid") {
  auto base = category_to_monad(*p1());
  CHECK(validate_warping(identity_warping(base)).valid());
  CHECK(validate_wreath(identity_wreath(base)).valid());
  CHECK(validate_mw_monad(identity_mw_monad(p1())).valid());
  CHECK(validate_mw_monad(testing::p1_const()).valid());
}

TEST_CASE("mw-monad counts agree with a hand enumeration") {
  for (const auto& c : {z2(), idem(), p1()}) {
    for (const auto& T : all_object_maps(c->objects())) {
      auto e = enumerate_mw_monads(c, T);
      CHECK(e.instances.size() == count_mw_by_hand(*c, T.images()));
      for (const auto& m : e.instances) CHECK(validate_mw_monad(m).valid());
    }
  }
}

TEST_CASE("Z/2 with T = id carries two mw-monads") {
  auto e = enumerate_mw_monads(z2(), FinFunction::identity(z2()->objects()));
  CHECK(e.candidates == 8);
  CHECK(e.instances.size() == 2);
}

TEST_CASE("unit s on Z/2 with identity ext breaks the unit laws") {
  auto m = identity_mw_monad(z2());
  m.units = {1};
  auto r = validate_mw_monad(m);
  CHECK(r.failed(2));
  CHECK(r.failed(3));
  CHECK_FALSE(r.failed(1));
  auto bad = validate_warping(mw_to_warping(m));
  CHECK(bad.failed(2));
  CHECK(bad.failed(3));
  CHECK_FALSE(bad.failed(1));
}

TEST_CASE("mw-monads and F*-shaped warpings are the same data") {
  for (const auto& c : {z2(), p1()})
    for (const auto& T : all_object_maps(c->objects()))
      for (const auto& m : enumerate_mw_monads(c, T).instances) {
        auto w = mw_to_warping(m);
        CHECK(validate_warping(w).valid());
        CHECK(star_shape(*w.endo).has_value());
        CHECK(mw_view(w) == m);
      }
}

TEST_CASE("mw_view refuses an endo that is not F*") {
  auto base = category_to_monad(*z2());
  auto two = generator_span(base.objects(), base.objects(), {{{"o", "o"}, {"a", "b"}}});
  CHECK_FALSE(star_shape(*two).has_value());
  Warping w{base, two, {}, {}};
  CHECK_THROWS_AS(mw_view(w), StructureError);
}

TEST_CASE("axiom tables are complete") {
  CHECK(warping_axioms().size() == 3);
  CHECK(wreath_axioms().size() >= 7);
}
