#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "regrep/cyclotomic.hpp"

namespace regrep {

enum class Family { IntegersModPrimePower, TruncatedPolynomial };

// Parameters of o_r: Z/p^r (family a) or F_q[t]/t^r with q = p^f (family b).
struct RingSpec {
  Family family = Family::IntegersModPrimePower;
  std::uint64_t p = 2;
  int f = 1;
  int r = 1;

  // "Zp:p=2,r=3" or "Fqt:p=2,f=1,r=3".
  static RingSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// The residue field F_q = F_p[u]/(h), h the least monic irreducible of degree f
// under the order of its coefficient vector read as a base-p integer.
// Elements are encoded as sum a_i p^i for the coefficients a_i of u^i.
class ResidueField {
 public:
  ResidueField(std::uint64_t p, int f);

  std::uint64_t p() const { return p_; }
  int f() const { return f_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  // Absolute trace to F_p, as an integer in [0, p).
  std::uint64_t trace(std::uint64_t a) const;

 private:
  std::vector<std::uint64_t> digits(std::uint64_t a) const;
  std::uint64_t from_digits(const std::vector<std::uint64_t>& d) const;
  std::uint64_t mul_direct(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t p_;
  int f_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;  // monic, constant term first
  std::vector<std::uint8_t> mul_table_;  // present when q <= 256
};

// Arithmetic context for o_r. Elements are canonical indices
// x = sum_k c_k q^k where c_k in F_q is the coefficient of the uniformizer
// power varpi^k (base-p digits of the integer for family a, coefficients of t^k
// for family b). Valuation is the number of trailing zero digits.
class Ring {
 public:
  using Value = std::uint64_t;

  static std::shared_ptr<const Ring> make(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  Family family() const { return spec_.family; }
  std::uint64_t p() const { return spec_.p; }
  int f() const { return spec_.f; }
  int r() const { return spec_.r; }
  std::uint64_t q() const { return q_; }
  std::uint64_t size() const { return size_; }
  const ResidueField& residue() const { return residue_; }

  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value uniformizer() const { return r() > 1 ? q_ : 0; }
  Value from_int(std::int64_t value) const;

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const;
  Value inv(Value a) const;  // throws NotAUnit
  Value pow(Value a, std::uint64_t e) const;

  int valuation(Value a) const;
  bool is_unit(Value a) const { return a % q_ != 0; }

  // varpi^k (zero when k >= r).
  Value pi_pow(int k) const;
  // varpi^k * a.
  Value shift_up(Value a, int k) const;
  // Quotient b with a = varpi^k * b and b canonical below q^(r-k); needs valuation(a) >= k.
  Value shift_down(Value a, int k) const { return a / pow_q_[k]; }
  // Coefficient of varpi^k as a residue-field element.
  std::uint64_t digit(Value a, int k) const { return (a / pow_q_[k]) % q_; }
  // Canonical representative of a modulo p^k (keeps digits below k).
  Value mod_pi_pow(Value a, int k) const { return k >= r() ? a : a % pow_q_[k]; }
  // Image in o_i; the result is a valid canonical index for the level-i ring.
  Value reduce(Value a, int level) const;

  // Writes a = u * varpi^v with u a unit; returns the unit u (canonical).
  Value unit_part(Value a, int& v) const;

  // Exponent k with psi(varpi^-r a) = zeta_M^k, for p^r | M (family a) or p | M (family b).
  std::uint64_t psi_exponent(Value a, std::uint64_t root_order) const;
  // psi(varpi^-r a) as an exact root of unity.
  CyclotomicValue psi_fractional(Value a) const;
  // Order of the root-of-unity group psi takes values in.
  std::uint64_t psi_order() const;

  std::shared_ptr<const Ring> truncated(int level) const;

  std::string format(Value a) const;

  // Dense tables for |o_r| <= 256 (used by packed matrix kernels).
  bool has_tables() const { return !mul_table_.empty(); }
  const std::uint8_t* add_table() const { return add_table_.data(); }
  const std::uint8_t* mul_table() const { return mul_table_.data(); }
  const std::uint8_t* neg_table() const { return neg_table_.data(); }

  explicit Ring(const RingSpec& spec);

 private:
  Value add_direct(Value a, Value b) const;
  Value mul_direct(Value a, Value b) const;
  Value neg_direct(Value a) const;

  RingSpec spec_;
  std::uint64_t q_;
  std::uint64_t size_;
  std::vector<std::uint64_t> pow_q_;
  ResidueField residue_;
  std::vector<std::uint8_t> add_table_, mul_table_, neg_table_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Value type with ring identity attached; mixing rings throws SpecMismatch.
class RingElem {
 public:
  RingElem(RingPtr ring, Ring::Value value);

  const RingPtr& ring() const { return ring_; }
  Ring::Value value() const { return value_; }

  int valuation() const { return ring_->valuation(value_); }
  bool is_unit() const { return ring_->is_unit(value_); }
  RingElem inv() const;
  RingElem reduce(int level) const;
  CyclotomicValue psi_fractional() const { return ring_->psi_fractional(value_); }

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const;
  friend bool operator==(const RingElem& a, const RingElem& b);

  std::string to_string() const { return ring_->format(value_); }

 private:
  RingPtr ring_;
  Ring::Value value_;
};

}  // namespace regrep
