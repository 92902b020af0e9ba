#include <catch_amalgamated.hpp>

#include "support.hpp"

using support::run_cli;

namespace {

std::string sample(const std::string& name) { return std::string(CORNERING_SAMPLES) + "/" + name; }

}  // namespace

TEST_CASE("check accepts every sample") {
  for (const auto* name : {"combs.cornering", "finite_lenses.cornering", "free_optics.cornering",
                           "lemma_suite.cornering"}) {
    const auto r = run_cli(CORNERING_CLI, {"check", sample(name)});
    INFO(r.out);
    CHECK(r.code == 0);
  }
}

TEST_CASE("eq exit codes") {
  auto r = run_cli(CORNERING_CLI, {"eq", sample("free_optics.cornering"), "slid_left", "slid_right", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle: equal") != std::string::npos);
  r = run_cli(CORNERING_CLI, {"eq", sample("free_optics.cornering"), "h", "hk"});
  CHECK(r.code == 1);
  CHECK(r.out.starts_with("unequal"));
  CHECK(run_cli(CORNERING_CLI, {"eq", sample("free_optics.cornering"), "fg", "gf"}).code == 0);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run_cli(CORNERING_CLI, std::vector<std::string>{"bogus"}).code == 2);
  CHECK(run_cli(CORNERING_CLI, {"eq", sample("free_optics.cornering"), "h", "nothing"}).code == 2);
  const auto path = std::filesystem::temp_directory_path() / "cornering_bad.cornering";
  {
    std::ofstream out(path);
    out << "object A\ngen f : A -> Q\n";
  }
  const auto r = run_cli(CORNERING_CLI, std::vector<std::string>{"check", path.string()}, true);
  CHECK(r.code == 2);
  CHECK(r.out.find("UnresolvedReference") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("lemma suite as JSON") {
  const auto r = run_cli(CORNERING_CLI, {"--json", "lemma-suite", "--sizes", "2,2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "lemma-suite");
  CHECK(j["result"]["lenses"] == 64);
  CHECK(j["result"]["violations"] == 0);
}

TEST_CASE("lens laws and lawfulness") {
  const auto f = sample("finite_lenses.cornering");
  auto r = run_cli(CORNERING_CLI, {"lens-laws", f, "forgetful"});
  CHECK(r.code == 1);
  CHECK(r.out.find("PutGet fails") != std::string::npos);
  CHECK(run_cli(CORNERING_CLI, {"lens-laws", f, "very_well_behaved"}).code == 0);
  CHECK(run_cli(CORNERING_CLI, {"lawful", f, "very_well_behaved"}).code == 0);
  CHECK(run_cli(CORNERING_CLI, {"lawful", f, "constant"}).code == 1);
  r = run_cli(CORNERING_CLI, {"--json", "lens-laws", f, "forgetful"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["getput"] == true);
  CHECK(j["result"]["putget"] == false);
}

TEST_CASE("run and interleave") {
  const auto f = sample("combs.cornering");
  auto r = run_cli(CORNERING_CLI, {"run", f, "memory", "not"});
  CHECK(r.code == 0);
  CHECK(r.out == "table(X -> X : 1, 1)\n");
  r = run_cli(CORNERING_CLI, {"interleave", f, "memory", "client"});
  CHECK(r.code == 0);
  CHECK(r.out == "table(I -> X : 1)\n");
}

TEST_CASE("render is deterministic") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = (dir / "cornering_render_a.svg").string(), b = (dir / "cornering_render_b.svg").string();
  REQUIRE(run_cli(CORNERING_CLI, {"render", sample("combs.cornering"), "three", "--out", a}).code == 0);
  REQUIRE(run_cli(CORNERING_CLI, {"render", sample("combs.cornering"), "three", "--out", b}).code == 0);
  const auto sa = support::read_file(a);
  CHECK(sa.starts_with("<svg"));
  CHECK(sa == support::read_file(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
