#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regrep/chartable.hpp"
#include "regrep/heisenberg.hpp"
#include "regrep/ledger.hpp"
#include "regrep/linear.hpp"
#include "regrep/orbits.hpp"

namespace regrep {

// G_r = GL_N(o_r) with its congruence filtration K^i = 1 + p^i M_N(o_r).
struct GroupContext {
  RingPtr ring;
  int n = 0;
  int r = 0;
  int l = 0;   // ceil(r/2)
  int lp = 0;  // floor(r/2)
  CodecPtr codec;
  GroupPtr G;
  std::vector<GroupPtr> K;  // K[i] for 0 <= i <= r
};

GroupContext make_context(const RingSpec& spec, int n, std::uint64_t cap = Group::kDefaultCap);

// psi_beta(1 + x) = psi(varpi^-r tr(beta x)) on a subgroup of K^1.
LinearChar psi_beta_character(const GroupContext& ctx, const Mat& beta, const GroupPtr& K);

struct ConstructionOptions {
  std::uint64_t cap = Group::kDefaultCap;
  // Above this many coset pairs the commutator closed form is sampled.
  std::uint64_t pair_limit = 1u << 16;
  bool klp_extension = true;
};

// All groups and characters attached to one regular orbit.
struct RegularDatum {
  OrbitRep orbit;  // at level l'
  BlockForm form;
  Parahoric amax;
  Parahoric amin;
  GroupPtr C;       // C_{G_r}(beta)
  GroupPtr CKlp;    // C K^{l'}
  GroupPtr CK1;     // C n K^1
  GroupPtr CKl;     // C n K^l
  GroupPtr CUm1;    // C n U_m^1
  GroupPtr Um_j;    // U_m^{e_m l'}
  GroupPtr Um_h;    // U_m^{e_m l' + 1}
  GroupPtr HM, JM, Hm, Jm, JmM;
  LinearChar psi;     // psi_beta on K^l
  LinearChar psi_m;   // psi_beta on U_m^{e_m l' + 1} (odd r)
};

struct ConstructedRep {
  std::size_t theta_id = 0;
  std::size_t etahat_id = 0;
  std::int64_t degree = 0;
  ClassFunction character;
};

struct RepReport {
  std::string orbit_key;
  int level = 0;
  std::string partition;
  bool sylow_ok = false;
  std::size_t theta_count = 0;
  std::vector<ConstructedRep> reps;
  Ledger ledger;
};

RegularDatum build_datum(const GroupContext& ctx, const OrbitRep& orbit, const ConstructionOptions& options = {});

// [CK^{l'} : J_{m,M}] coprime to p, computed as a group index and as |C| / |C n U_m^1|.
bool sylow_check(const GroupContext& ctx, const RegularDatum& d, Ledger& ledger);

// Every irreducible of G_r over psi_beta for a regular orbit at level l'.
// Odd r runs the Heisenberg construction, even r extends psi_beta to CK^{l'}.
RepReport construct_orbit(const GroupContext& ctx, const OrbitRep& orbit, const ConstructionOptions& options = {});

// Every sigma in Irr(K^{l'} | psi_beta) has degree q^{N(N-1)/2} and extends to CK^{l'} (odd r).
void klp_extension_check(const GroupContext& ctx, const RegularDatum& d, Ledger& ledger);

// Lemma-level checks that need only the datum (also run inside construct_orbit).
void check_datum(const GroupContext& ctx, const RegularDatum& d, Ledger& ledger);

}  // namespace regrep
