#include <doctest.h>

#include "support.hpp"

using namespace warp;
using testing::p1;
using testing::s1;
using testing::s2;
using testing::z2;

TEST_CASE("S1 and S2 are skew bicategories") {
  CHECK(validate_skew_bicategory(s1()).valid());
  CHECK(validate_skew_bicategory(s2()).valid());
  auto m = testing::s2_monoidal();
  CHECK(skew_monoidal_of(one_object_view(m)) == m);
}

TEST_CASE("S2 rho is not invertible") {
  auto s = s2();
  SkewCalc calc(s);
  SkewObj P{0, 0, 1};
  auto r = calc.rho(P);
  CHECK(calc.dst(r).index == 0);
  CHECK_FALSE(calc.dst(r) == calc.src(r));
}

TEST_CASE("single-field mutations of S2 are caught") {
  SUBCASE("alpha at (P,I,P) set to s") {
    // (1*l) a (r*1) = 1 forces it to be 1_P
    auto s = s2();
    s.alpha[{0, 0, 0, 0, 1, 0, 1}] = 3;
    auto r = validate_skew_bicategory(s);
    CHECK(r.structurally_sound());
    CHECK_FALSE(r.valid());
    REQUIRE_FALSE(r.violations().empty());
    CHECK_FALSE(r.violations().front().witness.empty());
  }
  SUBCASE("lambda at P set to s") {
    auto s = s2();
    s.lambda[{0, 0, 1}] = 3;
    auto r = validate_skew_bicategory(s);
    CHECK(r.structurally_sound());
    CHECK_FALSE(r.valid());
  }
  SUBCASE("ill-typed rho is structural") {
    auto s = s2();
    s.rho[{0, 0, 1}] = 2;
    CHECK_FALSE(validate_skew_bicategory(s).structurally_sound());
  }
}

TEST_CASE("identity skew warpings are valid and their Kleisli is the base") {
  for (const auto& s : {s1(), s2()}) {
    auto w = identity_skew_warping(s);
    CHECK(validate_skew_warping(w).valid());
    auto k = skew_kleisli(w);
    CHECK(validate_skew_bicategory(k).valid());
    CHECK(k == s);
  }
}

TEST_CASE("discrete skew warpings agree with the Kleisli category") {
  for (const auto& c : {z2(), p1()})
    for (const auto& T : all_object_maps(c->objects()))
      for (const auto& m : enumerate_mw_monads(c, T).instances) {
        auto w = discrete_skew_warping(m);
        CHECK(validate_skew_warping(w).valid());
        auto k = skew_kleisli(w);
        CHECK(validate_skew_bicategory(k).valid());
        CHECK(k == discrete_skew_bicategory(kleisli_category(m)));
      }
}

TEST_CASE("a nu mutation on S2 is caught") {
  auto w = identity_skew_warping(s2());
  w.nu[{0, 0, 0, 0, 1}] = 3;
  auto r = validate_skew_warping(w);
  CHECK_FALSE(r.valid());
  CHECK_FALSE(r.violations().empty());
}

TEST_CASE("kappa families") {
  auto f1 = skew_warping_families(identity_skew_warping(s1()));
  CHECK(f1.rigid);
  CHECK(f1.valid.size() == 1);
  auto f2 = skew_warping_families(identity_skew_warping(s2()));
  CHECK_FALSE(f2.rigid);
  CHECK(f2.valid.size() == 1);
  CHECK(f2.valid.front() == identity_skew_warping(s2()));
}

TEST_CASE("self algebras") {
  for (const auto& s : {s1(), s2()}) {
    auto w = identity_skew_warping(s);
    for (std::size_t b = 0; b < s.size(); ++b) CHECK(validate_skew_algebra(self_skew_algebra(w, b)).valid());
  }
  auto a = self_skew_algebra(identity_skew_warping(s2()), 0);
  a.cell_nu[{0, 0, 0, 1}] = 3;
  CHECK_FALSE(validate_skew_algebra(a).valid());
}
