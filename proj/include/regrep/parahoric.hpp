#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "regrep/ledger.hpp"
#include "regrep/mat.hpp"
#include "regrep/module.hpp"
#include "regrep/packed.hpp"

namespace regrep {

// Block sizes of a flag in matrix order (top-left block first). The flag
// V_0 > V_1 > ... > V_e = 0 has V_i spanned by the first N_i standard basis
// vectors, where N_i is the sum of the first e - i block sizes.
struct Flag {
  std::vector<int> blocks;

  int n() const;
  int e() const { return static_cast<int>(blocks.size()); }
  int rank(int i) const;  // N_i for 0 <= i <= e
  // "flag:1,1" (the prefix is optional).
  static Flag parse(std::string_view text);
  static Flag maximal(int n) { return Flag{{n}}; }
  std::string to_string() const;
};

// Every flag of o^n in standard form (all compositions of n).
std::vector<Flag> all_flags(int n);

// Parahoric subalgebra A of M_N(o_r) for a standard flag, with its radical P.
class Parahoric {
 public:
  Parahoric(RingPtr ring, Flag flag);

  const RingPtr& ring() const { return ring_; }
  const Flag& flag() const { return flag_; }
  int n() const { return flag_.n(); }
  int e() const { return flag_.e(); }
  int r() const { return ring_->r(); }
  int block_of(int row) const { return block_[row]; }  // 1-based block index

  // Least valuation allowed at entry (i, j) of P^m: ceil((m + b(i) - b(j)) / e), clamped to [0, r].
  int required_valuation(int m, int i, int j) const;
  bool in_radical_power(int m, const Mat& x) const;  // throws BadExponent outside [0, er]
  bool in_algebra(const Mat& x) const { return in_radical_power(0, x); }
  // P^m as a submodule of o^(N^2), generated by varpi^v E_ij.
  ModuleBasis radical_power(int m) const;
  // P^m computed as the m-fold product P ... P (A for m = 0).
  ModuleBasis radical_power_by_products(int m) const;
  // Lattice L_k of the chain (zero for k >= er), as a submodule of o^N.
  ModuleBasis lattice(int k) const;

  // log_q |P^m|.
  int log_size(int m) const;
  // Elements 1 + x for x in P^m (units of A for m = 0), as keys; CapExceeded above cap.
  std::vector<Key> enumerate_units(const MatCodec& codec, int m, std::uint64_t cap) const;

 private:
  RingPtr ring_;
  Flag flag_;
  std::vector<int> block_;
};

// Machine checks of the filtration lemmas for one parahoric; entries go to the ledger.
void check_lattice_chain(const Parahoric& P, Ledger& ledger);
void check_parahoric_pi(const Parahoric& P, Ledger& ledger);
void check_radical_powers(const Parahoric& P, Ledger& ledger);
void check_shift(const Parahoric& P, Ledger& ledger);
void check_ap_formulae(const Parahoric& P, Ledger& ledger);
void check_trace_duality(const Parahoric& P, Ledger& ledger);
// Commutators [U^m, U^n] in U^(m+n): exhaustive when |U^m||U^n| <= exhaustive_limit, else sampled.
void check_commutator_filtration(const Parahoric& P, Ledger& ledger, std::uint64_t samples = 10000,
                                 std::uint64_t exhaustive_limit = 1u << 20);
// U^m abelian for m >= ceil(er/2), and non-abelian just below when that holds (recorded).
void check_abelian_filtration(const Parahoric& P, Ledger& ledger, std::uint64_t cap = 1u << 16);

}  // namespace regrep
