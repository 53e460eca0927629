#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "regrep/cli.hpp"

namespace {

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "regrep");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return regrep::run_cli(static_cast<int>(argv.size()), argv.data());
}

nlohmann::json load(const std::filesystem::path& p) {
  std::ifstream f(p);
  return nlohmann::json::parse(f);
}

}  // namespace

TEST_CASE("cli exit codes") {
  const auto dir = std::filesystem::temp_directory_path() / "regrep_cli_test";
  std::filesystem::create_directories(dir);
  const auto out = (dir / "out.json").string();
  CHECK(cli({"ring-info", "--ring", "Zp:p=2,r=3", "--n", "2", "--out", out}) == 0);
  CHECK(load(out)["unit_group_order"] == 1536);
  CHECK(cli({"ring-info", "--ring", "nonsense", "--out", out}) == 2);
  CHECK(cli({"construct", "--ring", "Zp:p=2,r=3", "--n", "2", "--cap", "100", "--out", out}) == 3);
  CHECK(cli({"construct", "--ring", "Zp:p=2,r=3", "--n", "2", "--orbit", "charpoly=x^2+", "--out", out}) == 2);
  CHECK(cli({"bogus"}) == 2);
}

TEST_CASE("cli construct, oracle and compare") {
  const auto dir = std::filesystem::temp_directory_path() / "regrep_cli_test";
  std::filesystem::create_directories(dir);
  const auto report = (dir / "report.json").string();
  const auto census = (dir / "census.json").string();
  const auto verdict = (dir / "verdict.json").string();
  REQUIRE(cli({"construct", "--ring", "Zp:p=2,r=2", "--n", "2", "--orbit", "all-regular", "--out", report}) == 0);
  CHECK(load(report)["orbits"].size() == 4);
  REQUIRE(cli({"oracle", "--ring", "Zp:p=2,r=2", "--n", "2", "--dump", census}) == 0);
  CHECK(load(census)["order"] == 96);
  CHECK(cli({"compare", "--census", census, "--report", report, "--out", verdict}) == 0);
  CHECK(load(verdict)["match"] == true);

  const auto single = (dir / "single.json").string();
  REQUIRE(cli({"construct", "--ring", "Zp:p=2,r=2", "--n", "2", "--orbit", "charpoly=x^2+x+1", "--out", single}) == 0);
  CHECK(load(single)["orbit"] == "x^2+x+1");
  CHECK(cli({"compare", "--census", census, "--report", single, "--out", verdict}) == 0);

  // Same run twice gives identical bytes.
  const auto again = (dir / "again.json").string();
  REQUIRE(cli({"construct", "--ring", "Zp:p=2,r=2", "--n", "2", "--jobs", "3", "--out", again}) == 0);
  std::ifstream a(report), b(again);
  const std::string ta((std::istreambuf_iterator<char>(a)), {}), tb((std::istreambuf_iterator<char>(b)), {});
  CHECK(ta == tb);

  // A report for another group is a usage error.
  const auto other = (dir / "other.json").string();
  REQUIRE(cli({"construct", "--ring", "Zp:p=3,r=2", "--n", "2", "--orbit", "charpoly=x^2+1", "--out", other}) == 0);
  CHECK(cli({"compare", "--census", census, "--report", other, "--out", verdict}) == 2);
}

TEST_CASE("cli verify-lemmas filter") {
  const auto out = (std::filesystem::temp_directory_path() / "regrep_verify.json").string();
  REQUIRE(cli({"verify-lemmas", "--ring", "Zp:p=2,r=3", "--n", "2", "--checks", "trace-duality", "--out", out}) == 0);
  const auto j = load(out);
  REQUIRE(!j["lemma_ledger"]["entries"].empty());
  for (const auto& e : j["lemma_ledger"]["entries"]) CHECK(e["lemma"] == "trace-duality");
  CHECK(cli({"verify-lemmas", "--ring", "Zp:p=2,r=3", "--n", "2", "--out", out}) == 0);
  CHECK(load(out)["lemma_ledger"]["passed"] == true);
}
