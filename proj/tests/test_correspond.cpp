#include <doctest.h>

#include "support.hpp"

using namespace warp;
using testing::p1;
using testing::z2;

namespace {

std::vector<MwMonad> all_mw(const CategoryPtr& c) {
  std::vector<MwMonad> out;
  for (const auto& T : all_object_maps(c->objects()))
    for (auto& m : enumerate_mw_monads(c, T).instances) out.push_back(std::move(m));
  return out;
}

}  // namespace

TEST_CASE("warping and monad on AB determine each other") {
  for (const auto& c : {z2(), p1()})
    for (const auto& m : all_mw(c)) {
      auto w = mw_to_warping(m);
      auto ab = warping_to_monad(w);
      CHECK(check_side_condition(ab, SideCondition::full).valid());
      CHECK(monad_to_warping(ab) == w);
    }
}

TEST_CASE("warping and wreath determine each other") {
  for (const auto& c : {z2(), p1()})
    for (const auto& m : all_mw(c)) {
      auto w = mw_to_warping(m);
      auto r = warping_to_wreath(w);
      CHECK(validate_wreath(r).valid());
      CHECK(wreath_to_warping(r) == w);
      CHECK(wreath_to_monad(r) == warping_to_monad(w));
    }
}

TEST_CASE("identity warping and identity wreath correspond") {
  auto base = category_to_monad(*z2());
  CHECK(warping_to_wreath(identity_warping(base)) == identity_wreath(base));
  CHECK(wreath_to_warping(identity_wreath(base)) == identity_warping(base));
}

TEST_CASE("Kleisli composition is Tg o f") {
  for (const auto& c : {z2(), p1()})
    for (const auto& m : all_mw(c)) {
      auto k = kleisli_category(m);
      CHECK(validate_category(k).valid());
      const auto& T = m.object_map;
      std::size_t n = c->object_count();
      for (std::size_t x = 0; x < n; ++x) {
        CHECK(k.identity(x) == m.units[x]);
        for (std::size_t y = 0; y < n; ++y) {
          CHECK(k.hom(x, y) == c->hom(x, T(y)));
          for (std::size_t z = 0; z < n; ++z)
            for (std::size_t f = 0; f < c->hom(x, T(y)).size(); ++f)
              for (std::size_t g = 0; g < c->hom(y, T(z)).size(); ++g)
                CHECK(k.compose(x, y, z, g, f) == c->compose(x, T(y), T(z), m.apply(y, z, g), f));
        }
      }
      CHECK(kleisli_via_wreath(m) == k);
    }
}

TEST_CASE("Kleisli category of P1 with T constant at 1 is codiscrete") {
  auto k = kleisli_category(testing::p1_const());
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y) CHECK(k.hom(x, y).size() == 1);
}

TEST_CASE("classical monads from wreaths are monads") {
  for (const auto& c : {z2(), p1()})
    for (const auto& m : all_mw(c)) CHECK(validate_classical_monad(classical_monad(warping_to_wreath(mw_to_warping(m)))).valid());
}

TEST_CASE("self action is an algebra") {
  for (const auto& m : all_mw(z2())) CHECK(validate_algebra(self_action(mw_to_warping(m))).valid());
}

TEST_CASE("E-families and Eilenberg-Moore algebras") {
  SUBCASE("identity monad on Z/2: only E = id and alpha = 1") {
    auto m = identity_mw_monad(z2());
    CHECK(enumerate_e_families(m, 0).instances.size() == 1);
    auto cm = classical_monad(warping_to_wreath(mw_to_warping(m)));
    CHECK(enumerate_em_algebras(cm, 0).instances.size() == 1);
  }
  SUBCASE("P1 with T constant at 1: no action on 0, one on 1") {
    auto m = testing::p1_const();
    auto cm = classical_monad(warping_to_wreath(mw_to_warping(m)));
    CHECK(enumerate_e_families(m, 0).instances.empty());
    CHECK(enumerate_em_algebras(cm, 0).instances.empty());
    CHECK(enumerate_e_families(m, 1).instances.size() == 1);
    CHECK(enumerate_em_algebras(cm, 1).instances.size() == 1);
  }
  SUBCASE("translations are inverse") {
    for (const auto& c : {z2(), p1()})
      for (const auto& m : all_mw(c))
        for (std::size_t a = 0; a < c->object_count(); ++a)
          for (const auto& e : enumerate_e_families(m, a).instances) {
            auto alg = e_family_to_algebra(e);
            CHECK(validate_algebra(alg).valid());
            CHECK(algebra_as_e_family(alg) == e);
            auto em = algebra_to_em_algebra(e);
            CHECK(validate_em_algebra(em).valid());
            CHECK(em_algebra_to_e_family(em, m) == e);
          }
  }
}

TEST_CASE("a mutated E-family is rejected") {
  auto m = identity_mw_monad(z2());
  auto e = enumerate_e_families(m, 0).instances.at(0);
  e.maps[0] = {1, 0};
  auto r = validate_e_family(e);
  CHECK_FALSE(r.valid());
  CHECK_FALSE(r.violations().empty());
}
