#pragma once

#include <cstdint>
#include <vector>

#include "regrep/classfn.hpp"
#include "regrep/group.hpp"

namespace regrep {

// Irreducible characters of an enumerated group, computed by Dixon-Schneider
// modulo a prime ell = 1 (mod exp G) with ell > 2|G| and lifted to exact
// cyclotomic values through eigenvalue multiplicities.
struct CharacterTable {
  GroupPtr group;
  std::uint64_t exponent = 1;
  std::uint32_t ell = 0;
  std::uint64_t root = 0;  // image of zeta_exponent in F_ell
  std::vector<ClassFunction> irreducibles;             // by degree, then by values mod ell
  std::vector<std::vector<std::uint32_t>> values_mod;  // same order, per class

  std::size_t size() const { return irreducibles.size(); }
  // Multiplicities of each irreducible in a virtual character (exact: verified by recombination).
  std::vector<std::int64_t> decompose(const ClassFunction& chi) const;
  // Position of an irreducible equal to chi, or -1.
  std::int64_t find(const ClassFunction& chi) const;
};

struct TableOptions {
  std::uint64_t cap = 1'000'000;
  // Above this many classes the orthogonality audit runs modulo two primes instead of exactly.
  std::size_t exact_audit_limit = 96;
};

CharacterTable character_table(const GroupPtr& G, const TableOptions& options = {});

}  // namespace regrep
