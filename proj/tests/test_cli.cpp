#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "warp/cli.hpp"

using namespace warp;
using testing::fixture_dir;
using testing::read_file;

namespace {

std::string fx(const std::string& name) { return fixture_dir() + "/" + name; }

std::string scratch(const std::string& name, const std::string& text) {
  auto path = (std::filesystem::temp_directory_path() / ("warp_test_" + name)).string();
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run_cli({"validate", fx("w1_warping.json")}).exit_code == 0);
  CHECK(run_cli({"validate", fx("w1_warping_k_s.json")}).exit_code == 1);
  CHECK(run_cli({"validate", fx("s2_alpha_mutated.json")}).exit_code == 1);
  CHECK(run_cli({"validate", fx("malformed/truncated.json")}).exit_code == 2);
  CHECK(run_cli({"validate", fx("malformed/unknown_kind.json")}).exit_code == 2);
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
  CHECK(run_cli({}).exit_code == 2);
}

TEST_CASE("convert roundtrips byte for byte") {
  auto w = read_file(fx("w1_warping.json"));
  auto to_wreath = run_cli({"convert", fx("w1_warping.json"), "--to", "wreath"});
  REQUIRE(to_wreath.exit_code == 0);
  auto back = run_cli({"convert", scratch("wreath.json", to_wreath.out), "--to", "warping"});
  REQUIRE(back.exit_code == 0);
  CHECK(back.out == w);
  auto same = run_cli({"convert", fx("identity_wreath.json"), "--to", "wreath"});
  CHECK(same.out == read_file(fx("identity_wreath.json")));
}

TEST_CASE("identity warping and its base monad") {
  auto m = run_cli({"convert", fx("identity_warping.json"), "--to", "monad"});
  REQUIRE(m.exit_code == 0);
  auto again = run_cli({"validate", scratch("monad.json", m.out)});
  CHECK(again.exit_code == 0);
}

TEST_CASE("kleisli output revalidates") {
  for (const char* f : {"p1_mw_monad.json", "w1_mw_monad.json", "s1_skew_warping.json", "s2_skew_warping.json"}) {
    CAPTURE(f);
    auto k = run_cli({"kleisli", fx(f)});
    REQUIRE(k.exit_code == 0);
    CHECK(run_cli({"validate", scratch("kleisli.json", k.out)}).exit_code == 0);
  }
  // the identity mw-monad gives back its base
  CHECK(run_cli({"kleisli", fx("w1_mw_monad.json")}).out == read_file(fx("w1_base.json")));
}

TEST_CASE("reports are reproducible") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"validate", fx("s2_nu_mutated.json")},
           {"enumerate", fx("p1_base.json"), "--kind", "wreath", "--emit"},
           {"validate", fx("malformed/truncated.json"), "--format", "pretty"}}) {
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}

TEST_CASE("witness selection and timing") {
  auto all = parse_document(run_cli({"validate", fx("w1_warping_k_s.json")}).out);
  auto first = parse_document(run_cli({"validate", fx("w1_warping_k_s.json"), "--witnesses", "first"}).out);
  CHECK(all["witnesses"].size() == 2);
  CHECK(first["witnesses"].size() == 1);
  CHECK(first["violation_count"] == all["violation_count"]);
  CHECK_FALSE(all.contains("wall_time_ms"));
  auto timed = parse_document(run_cli({"validate", fx("w1_base.json"), "--timing"}).out);
  CHECK(timed.contains("wall_time_ms"));
}

TEST_CASE("enumerate counts") {
  auto r = parse_document(run_cli({"enumerate", fx("w1_base.json"), "--kind", "wreath"}).out);
  CHECK(r["counts"]["instances"] == 2);
  auto e = parse_document(run_cli({"enumerate", fx("p1_mw_monad.json"), "--kind", "e_family"}).out);
  auto em = parse_document(run_cli({"enumerate", fx("p1_mw_monad.json"), "--kind", "em_algebra"}).out);
  CHECK(e["counts"]["per_object"] == em["counts"]["per_object"]);
  auto refused = run_cli({"enumerate", fx("w1_base.json"), "--kind", "mw_monad", "--max-hom", "1"});
  CHECK(refused.exit_code == 2);
  CHECK(refused.out.find("--max-hom") != std::string::npos);
}
