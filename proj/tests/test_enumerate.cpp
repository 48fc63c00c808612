#include <doctest.h>

#include <map>

#include "support.hpp"

using namespace warp;
using testing::count_mw_by_hand;
using testing::p1;
using testing::z2;

namespace {

std::string label(const FinFunction& T) {
  std::string out;
  for (std::size_t x = 0; x < T.dom().size(); ++x) out += T.dom()[x] + T.cod()[T(x)];
  return out;
}

}  // namespace

TEST_CASE("Z/2, T = id: two of everything") {
  auto base = category_to_monad(*z2());
  auto T = FinFunction::identity(base.objects());
  auto A = restrict_star(T);
  auto mw = enumerate_mw_monads(z2(), T);
  auto wp = enumerate_warpings(base, A);
  auto wr = enumerate_wreaths(base, A);
  auto ab = enumerate_monads_on_ab(base, A, SideCondition::monoid_map);
  CHECK(mw.instances.size() == 2);
  CHECK(wp.instances.size() == 2);
  CHECK(wr.instances.size() == 2);
  CHECK(ab.instances.size() == 2);
  CHECK(mw.candidates == 8);
  CHECK(wr.candidates == 16);
  CHECK(ab.candidates == 4);
}

TEST_CASE("identity span over Z/2 gives the same counts as id*") {
  auto base = category_to_monad(*z2());
  auto I = identity_span(base.objects());
  CHECK(enumerate_warpings(base, I).instances.size() == 2);
  CHECK(enumerate_wreaths(base, I).instances.size() == 2);
}

TEST_CASE("P1 counts per object map") {
  // K_1: 1 -> T1 needs T1 = 1; every hom of P1 has at most one arrow, so the
  // rest is forced
  std::map<std::string, std::size_t> expect{{"0010", 0}, {"0011", 1}, {"0110", 0}, {"0111", 1}};
  auto base = category_to_monad(*p1());
  for (const auto& T : all_object_maps(p1()->objects())) {
    auto A = restrict_star(T);
    auto want = expect.at(label(T));
    CHECK(enumerate_mw_monads(p1(), T).instances.size() == want);
    CHECK(enumerate_warpings(base, A).instances.size() == want);
    CHECK(enumerate_wreaths(base, A).instances.size() == want);
    CHECK(enumerate_monads_on_ab(base, A, SideCondition::monoid_map).instances.size() == want);
  }
}

TEST_CASE("candidate limit is enforced") {
  auto base = category_to_monad(*z2());
  auto A = restrict_star(FinFunction::identity(base.objects()));
  CHECK_THROWS_AS(enumerate_wreaths(base, A, EnumerationLimits{3}), LimitExceeded);
}

TEST_CASE("empty homs leave only the units to choose") {
  auto d = std::make_shared<const FinCategory>(discrete_category(FinSet{"a", "b"}));
  std::size_t total = 0;
  for (const auto& T : all_object_maps(d->objects())) total += enumerate_mw_monads(d, T).instances.size();
  // K_x: x -> Tx exists only for T = id
  CHECK(total == 1);
}

TEST_CASE("idempotent monoid: the monoid-map condition alone is too weak") {
  auto c = testing::idem();
  auto base = category_to_monad(*c);
  auto A = restrict_star(FinFunction::identity(base.objects()));
  auto ws = enumerate_warpings(base, A).instances;
  auto loose = enumerate_monads_on_ab(base, A, SideCondition::monoid_map).instances;
  auto full = enumerate_monads_on_ab(base, A, SideCondition::full).instances;
  CHECK(ws.size() == count_mw_by_hand(*c, {0}));
  CHECK(full.size() == ws.size());
  CHECK(loose.size() > full.size());
  for (const auto& w : ws) CHECK(std::find(full.begin(), full.end(), warping_to_monad(w)) != full.end());
}
