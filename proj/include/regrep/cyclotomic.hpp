#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace regrep {

// Exact element of Z[zeta_m], stored by its coordinates in the power basis
// 1, zeta_m, ..., zeta_m^(phi(m)-1). Equality is coordinate equality after
// bringing both sides to a common modulus.
class CyclotomicValue {
 public:
  CyclotomicValue();
  explicit CyclotomicValue(std::int64_t integer, std::uint64_t modulus = 1);

  static CyclotomicValue root_of_unity(std::uint64_t modulus, std::uint64_t exponent);

  // sum_k counts[k] * zeta_m^k for k < m.
  static CyclotomicValue from_exponent_counts(std::uint64_t modulus, std::span<const std::int64_t> counts);

  // Build from canonical coordinates; the vector must have length phi(modulus).
  static CyclotomicValue from_coefficients(std::uint64_t modulus, std::vector<std::int64_t> coefficients);

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  // Same number viewed in Z[zeta_M]; requires modulus() | M.
  CyclotomicValue embed(std::uint64_t target_modulus) const;

  CyclotomicValue conj() const;

  bool is_zero() const;
  bool is_rational() const;
  // Throws CheckFailed unless the value is a rational integer.
  std::int64_t rational_value() const;

  // Image in F_ell under zeta_m -> root, root a primitive m-th root of unity mod ell.
  std::uint64_t eval_mod(std::uint64_t ell, std::uint64_t root) const;

  std::string to_string() const;

  CyclotomicValue& operator+=(const CyclotomicValue& other);
  CyclotomicValue& operator-=(const CyclotomicValue& other);
  CyclotomicValue& operator*=(const CyclotomicValue& other);
  CyclotomicValue operator-() const;
  CyclotomicValue scaled(std::int64_t factor) const;

  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
  friend CyclotomicValue operator*(CyclotomicValue a, const CyclotomicValue& b) { return a *= b; }
  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b);

 private:
  std::uint64_t modulus_;
  std::vector<std::int64_t> coeffs_;
};

// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t m);

}  // namespace regrep
