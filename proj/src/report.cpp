#include "regrep/report.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "regrep/error.hpp"
#include "regrep/modular.hpp"

namespace regrep {

std::string value_text(const CyclotomicValue& v, std::uint64_t modulus) {
  if (v.is_rational()) return std::to_string(v.rational_value());
  return v.embed(std::lcm(modulus, v.modulus())).to_string();
}

std::uint64_t common_modulus(const GroupPtr& G, const RingPtr& ring) {
  return std::lcm(G->classes().exponent, ring->psi_order());
}

Json ledger_json(const Ledger& ledger, const std::vector<std::string>& only) {
  Json entries = Json::array();
  bool passed = true;
  for (const auto& e : ledger.entries()) {
    if (!only.empty() && std::find(only.begin(), only.end(), e.lemma) == only.end()) continue;
    Json j;
    j["lemma"] = e.lemma;
    j["instance"] = e.instance;
    if (e.recorded)
      j["status"] = e.passed ? "observed" : "not-observed";
    else
      j["status"] = e.passed ? "pass" : "fail";
    if (!e.detail.empty()) j[e.passed || e.recorded ? "detail" : "counterexample"] = e.detail;
    passed &= e.recorded || e.passed;
    entries.push_back(std::move(j));
  }
  Json out;
  out["passed"] = passed;
  out["entries"] = std::move(entries);
  return out;
}

Json classes_json(const GroupPtr& G) {
  const auto& cls = G->classes();
  Json out = Json::array();
  for (std::size_t c = 0; c < cls.reps.size(); ++c) out.push_back({{"rep", cls.reps[c]}, {"size", cls.sizes[c]}});
  return out;
}

Json report_json(const GroupContext& ctx, const RepReport& report, std::optional<bool> oracle_match) {
  const auto modulus = common_modulus(ctx.G, ctx.ring);
  Json out;
  out["ring"] = ctx.ring->spec().to_string();
  out["N"] = ctx.n;
  out["r"] = ctx.r;
  out["orbit"] = report.orbit_key;
  out["level"] = report.level;
  out["partition"] = report.partition;
  out["sylow_ok"] = report.sylow_ok;
  out["theta_count"] = report.theta_count;
  out["lemma_ledger"] = ledger_json(report.ledger);
  Json reps = Json::array();
  for (const auto& rep : report.reps) {
    Json values = Json::array();
    for (Key k : ctx.G->classes().reps) values.push_back(value_text(rep.character.at(k), modulus));
    reps.push_back({{"theta_id", rep.theta_id}, {"etahat_id", rep.etahat_id}, {"degree", rep.degree}, {"character", values}});
  }
  out["reps"] = std::move(reps);
  out["oracle_match"] = oracle_match ? Json(*oracle_match) : Json(nullptr);
  return out;
}

Json census_json(const IrrepCensus& census) {
  const auto modulus = common_modulus(census.G, census.G->codec()->ring());
  Json out;
  out["ring"] = census.spec.to_string();
  out["N"] = census.n;
  out["r"] = census.r;
  out["order"] = census.G->order();
  out["classes"] = classes_json(census.G);
  Json irreps = Json::array(), chars = Json::array();
  for (std::size_t a = 0; a < census.info.size(); ++a) {
    const auto& info = census.info[a];
    irreps.push_back({{"degree", info.degree},
                      {"regular", info.regular},
                      {"orbit", info.key},
                      {"multiplicity", info.multiplicity},
                      {"orbit_size", info.orbit_size}});
    Json row = Json::array();
    for (const auto& v : census.table.irreducibles[a].values()) row.push_back(value_text(v, modulus));
    chars.push_back(std::move(row));
  }
  out["irreps"] = std::move(irreps);
  out["chars"] = std::move(chars);
  std::string why;
  out["consistent"] = census_consistent(census, &why);
  if (!why.empty()) out["inconsistency"] = why;
  return out;
}

Json verdict_json(const Verdict& verdict) {
  Json out;
  out["match"] = verdict.regular_match();
  Json orbits = Json::array();
  for (const auto& v : verdict.orbits)
    orbits.push_back({{"orbit", v.key},
                      {"constructed", v.constructed},
                      {"expected", v.expected},
                      {"degrees_match", v.degrees_match},
                      {"characters_match", v.characters_match},
                      {"injective", v.injective}});
  out["orbits"] = std::move(orbits);
  out["missing_orbits"] = verdict.missing_orbits;
  out["non_regular"] = {{"count", verdict.nonregular.count},
                        {"trivial_on_K^{r-1}", verdict.nonregular.trivial_on_last},
                        {"trivial_on_K^{r-1}_after_twist", verdict.nonregular.after_twist}};
  return out;
}

Verdict compare_json(const Json& census, const Json& report) {
  std::vector<Json> sections;
  if (report.contains("orbits"))
    for (const auto& s : report.at("orbits")) sections.push_back(s);
  else
    sections.push_back(report);
  for (const auto& s : sections)
    require(s.at("ring") == census.at("ring") && s.at("N") == census.at("N"), ErrorCode::SpecMismatch,
            "census and report describe different groups");
  // Report characters are listed on the report's own class list; both sides use least keys.
  std::vector<std::string> census_reps;
  for (const auto& c : census.at("classes")) census_reps.push_back(std::to_string(c.at("rep").get<std::uint64_t>()));
  std::vector<std::string> report_reps;
  const Json& report_classes = report.contains("classes") ? report.at("classes") : Json::array();
  for (const auto& c : report_classes) report_reps.push_back(std::to_string(c.at("rep").get<std::uint64_t>()));
  require(report_reps.empty() || report_reps == census_reps, ErrorCode::SpecMismatch, "class lists differ");

  Verdict verdict;
  std::map<std::string, std::vector<std::size_t>> by_key;
  const auto& irreps = census.at("irreps");
  for (std::size_t a = 0; a < irreps.size(); ++a)
    if (irreps[a].at("regular").get<bool>()) by_key[irreps[a].at("orbit").get<std::string>()].push_back(a);
  std::set<std::string> seen;
  for (const auto& s : sections) {
    OrbitVerdict v;
    v.key = s.at("orbit").get<std::string>();
    seen.insert(v.key);
    const auto it = by_key.find(v.key);
    const std::vector<std::size_t> expected = it == by_key.end() ? std::vector<std::size_t>{} : it->second;
    v.constructed = s.at("reps").size();
    v.expected = expected.size();
    std::vector<std::int64_t> got, want;
    for (const auto& rep : s.at("reps")) got.push_back(rep.at("degree").get<std::int64_t>());
    for (auto a : expected) want.push_back(irreps[a].at("degree").get<std::int64_t>());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    v.degrees_match = got == want;
    std::vector<bool> used(expected.size(), false);
    v.characters_match = v.constructed == v.expected;
    v.injective = true;
    for (const auto& rep : s.at("reps")) {
      bool hit = false;
      for (std::size_t i = 0; i < expected.size() && !hit; ++i) {
        if (census.at("chars")[expected[i]] != rep.at("character")) continue;
        hit = true;
        if (used[i]) v.injective = false;
        used[i] = true;
      }
      v.characters_match &= hit;
    }
    v.characters_match &= std::all_of(used.begin(), used.end(), [](bool b) { return b; });
    verdict.orbits.push_back(std::move(v));
  }
  for (const auto& [key, list] : by_key)
    if (!seen.count(key)) verdict.missing_orbits.push_back(key);
  return verdict;
}

}  // namespace regrep
