#include <doctest.h>

#include "support.hpp"

using namespace warp;
using testing::fixture_files;
using testing::load_fixture;
using testing::read_file;

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == "cbf29ce484222325");
  CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64("foobar") == "85944171f73967e8");
}

TEST_CASE("every fixture is in canonical form") {
  auto files = fixture_files();
  CHECK(files.size() >= 19);
  for (const auto& f : files) {
    CAPTURE(f);
    auto text = read_file(testing::fixture_dir() + "/" + f);
    CHECK(emit(parse_document(text)) == text);
  }
}

TEST_CASE("emit is idempotent on reformatted input") {
  for (const auto& f : fixture_files()) {
    CAPTURE(f);
    auto doc = load_fixture(f);
    auto once = emit(doc);
    CHECK(emit(parse_document(doc.dump())) == once);
    CHECK(emit(parse_document(doc.dump(7))) == once);
  }
}

TEST_CASE("typed roundtrips") {
  auto z = testing::z2();
  CHECK(category_from_json(to_json(*z)) == *z);
  auto m = testing::p1_const();
  CHECK(mw_monad_from_json(to_json(m)) == m);
  auto w = mw_to_warping(identity_mw_monad(z));
  CHECK(warping_from_json(to_json(w)) == w);
  auto r = warping_to_wreath(w);
  CHECK(wreath_from_json(to_json(r)) == r);
  auto a = self_action(w);
  CHECK(algebra_from_json(to_json(a)) == a);
  auto base = category_to_monad(*z);
  CHECK(monad_from_json(monad_to_json(base)) == base);
  auto iw = identity_warping(base);
  CHECK(warping_from_json(to_json(iw)) == iw);
  for (const auto& s : {testing::s1(), testing::s2()}) {
    CHECK(skew_bicategory_from_json(to_json(s)) == s);
    auto sw = identity_skew_warping(s);
    CHECK(skew_warping_from_json(to_json(sw)) == sw);
    auto sa = self_skew_algebra(sw, 0);
    CHECK(skew_algebra_from_json(to_json(sa)) == sa);
  }
}

TEST_CASE("shipped fixtures match the in-code constructions") {
  CHECK(category_from_json(load_fixture("w1_base.json")) == *testing::z2());
  CHECK(category_from_json(load_fixture("p1_base.json")) == *testing::p1());
  CHECK(mw_monad_from_json(load_fixture("p1_mw_monad.json")) == testing::p1_const());
  CHECK(skew_bicategory_from_json(load_fixture("s1_skew_bicategory.json")) == testing::s1());
  CHECK(skew_bicategory_from_json(load_fixture("s2_skew_bicategory.json")) == testing::s2());
}

TEST_CASE("schema errors carry a locus") {
  try {
    parse_document("{\n  \"kind\": ");
    FAIL("expected a SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.locus().rfind("line 2", 0) == 0);
  }
  auto doc = load_fixture("w1_base.json");
  doc["kind"] = "groupoid";
  try {
    kind_of(doc);
    FAIL("expected a SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.locus() == "/kind");
  }
  auto mw = load_fixture("w1_mw_monad.json");
  mw.erase("units");
  CHECK_THROWS_AS(mw_monad_from_json(mw), SchemaError);
}

TEST_CASE("readers refuse structures over a lawless base") {
  auto doc = load_fixture("w1_warping.json");
  doc["base"]["composition"][1][5] = "1";  // 1 s = 1
  CHECK_THROWS_AS(warping_from_json(doc), LawViolation);
}
