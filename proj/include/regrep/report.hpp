#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "regrep/construction.hpp"
#include "regrep/oracle.hpp"

namespace regrep {

using Json = nlohmann::ordered_json;

// Canonical text of an exact value viewed in Q(zeta_modulus).
std::string value_text(const CyclotomicValue& v, std::uint64_t modulus);
// Conductor every character of G_r fits into: lcm(exp G, psi order).
std::uint64_t common_modulus(const GroupPtr& G, const RingPtr& ring);

Json ledger_json(const Ledger& ledger, const std::vector<std::string>& only = {});
Json report_json(const GroupContext& ctx, const RepReport& report, std::optional<bool> oracle_match = std::nullopt);
// Class representatives of G as integers (least key per class).
Json classes_json(const GroupPtr& G);
Json census_json(const IrrepCensus& census);
Json verdict_json(const Verdict& verdict);

// Cross-process comparison of a census dump with a construct report (one orbit
// section or a document with "orbits"). Returns one verdict per orbit section.
Verdict compare_json(const Json& census, const Json& report);

}  // namespace regrep
