#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regrep/chartable.hpp"
#include "regrep/construction.hpp"
#include "regrep/ring.hpp"

namespace regrep {

// Brute-force census of Irr(G_r): full character table, each irreducible
// classified by the psi_b it contains on K^l.
struct IrrepInfo {
  std::int64_t degree = 0;
  bool regular = false;
  std::string key;                 // char poly of b at level l', or "non-regular"
  std::uint64_t multiplicity = 0;  // <Res chi, psi_b> for each b in the orbit
  std::size_t orbit_size = 0;      // number of b with nonzero multiplicity
  bool clifford_ok = false;
};

struct IrrepCensus {
  RingSpec spec;
  int n = 0, r = 0, l = 0, lp = 0;
  GroupPtr G;
  std::vector<GroupPtr> K;  // K[i], 0 <= i <= r
  CharacterTable table;
  std::vector<IrrepInfo> info;  // parallel to table.irreducibles
};

IrrepCensus full_census(const RingSpec& spec, int n, std::uint64_t cap = 1'000'000);

// Orthogonality holds by construction of the table; this re-checks sum deg^2,
// degree divisibility and Clifford consistency of every classification.
bool census_consistent(const IrrepCensus& census, std::string* detail = nullptr);

// Values of chi on the census's class representatives (chi may live on another
// copy of G_r with the same elements).
std::vector<CyclotomicValue> values_on_census(const IrrepCensus& census, const ClassFunction& chi);

struct OrbitVerdict {
  std::string key;
  std::size_t constructed = 0;
  std::size_t expected = 0;
  bool degrees_match = false;
  bool characters_match = false;
  bool injective = false;
  bool ok() const { return degrees_match && characters_match && injective; }
};

struct NonRegularVerdict {
  std::size_t count = 0;
  std::size_t trivial_on_last = 0;   // K^{r-1} in the kernel
  std::size_t after_twist = 0;       // K^{r-1} in the kernel after twisting by a linear character
};

struct Verdict {
  std::vector<OrbitVerdict> orbits;
  std::vector<std::string> missing_orbits;  // regular keys in the census with no report
  NonRegularVerdict nonregular;
  bool regular_match() const;
};

Verdict compare(const IrrepCensus& census, const std::vector<RepReport>& reports);
NonRegularVerdict nonregular_kernels(const IrrepCensus& census);

}  // namespace regrep
