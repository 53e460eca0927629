#include "regrep/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "regrep/error.hpp"
#include "regrep/modular.hpp"

namespace regrep {

namespace {

std::vector<std::int64_t> compute_cyclotomic(std::uint64_t m) {
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t deg = divisor.size() - 1;
    std::vector<std::int64_t> quotient(poly.size() - deg, 0);
    for (std::size_t i = poly.size(); i-- > deg;) {
      const std::int64_t lead = poly[i];
      quotient[i - deg] = lead;
      for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= lead * divisor[j];
    }
    poly = std::move(quotient);
  }
  return poly;
}

// Reduce a polynomial in zeta_m (arbitrary length) to canonical coordinates.
std::vector<std::int64_t> reduce(std::vector<std::int64_t> poly, std::uint64_t m) {
  const auto& phi_poly = cyclotomic_polynomial(m);
  const std::size_t deg = phi_poly.size() - 1;
  // First fold exponents modulo m using zeta^m = 1.
  if (poly.size() > m) {
    for (std::size_t i = m; i < poly.size(); ++i) poly[i % m] += poly[i];
    poly.resize(m);
  }
  for (std::size_t i = poly.size(); i-- > deg;) {
    const std::int64_t lead = poly[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= lead * phi_poly[j];
  }
  poly.resize(deg, 0);
  return poly;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t m) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(m);
  std::lock_guard lock(mutex);
  // std::map never invalidates references on insert.
  return cache.emplace(m, std::move(poly)).first->second;
}

CyclotomicValue::CyclotomicValue() : modulus_(1), coeffs_{0} {}

CyclotomicValue::CyclotomicValue(std::int64_t integer, std::uint64_t modulus)
    : modulus_(modulus), coeffs_(euler_phi(modulus), 0) {
  coeffs_[0] = integer;
}

CyclotomicValue CyclotomicValue::root_of_unity(std::uint64_t modulus, std::uint64_t exponent) {
  std::vector<std::int64_t> poly(modulus, 0);
  poly[exponent % modulus] = 1;
  return from_coefficients(modulus, reduce(std::move(poly), modulus));
}

CyclotomicValue CyclotomicValue::from_exponent_counts(std::uint64_t modulus, std::span<const std::int64_t> counts) {
  std::vector<std::int64_t> poly(counts.begin(), counts.end());
  return from_coefficients(modulus, reduce(std::move(poly), modulus));
}

CyclotomicValue CyclotomicValue::from_coefficients(std::uint64_t modulus, std::vector<std::int64_t> coefficients) {
  require(coefficients.size() == euler_phi(modulus), ErrorCode::ShapeMismatch, "cyclotomic coordinate length");
  CyclotomicValue out;
  out.modulus_ = modulus;
  out.coeffs_ = std::move(coefficients);
  return out;
}

CyclotomicValue CyclotomicValue::embed(std::uint64_t target) const {
  if (target == modulus_) return *this;
  require(target % modulus_ == 0, ErrorCode::SpecMismatch, "cyclotomic embedding needs m | M");
  const std::uint64_t stride = target / modulus_;
  std::vector<std::int64_t> poly(target, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) poly[k * stride] = coeffs_[k];
  return from_coefficients(target, reduce(std::move(poly), target));
}

CyclotomicValue CyclotomicValue::conj() const {
  std::vector<std::int64_t> poly(modulus_, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) poly[(modulus_ - k) % modulus_] += coeffs_[k];
  return from_coefficients(modulus_, reduce(std::move(poly), modulus_));
}

bool CyclotomicValue::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicValue::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

std::int64_t CyclotomicValue::rational_value() const {
  require(is_rational(), ErrorCode::CheckFailed, "cyclotomic value is not rational: " + to_string());
  return coeffs_[0];
}

std::uint64_t CyclotomicValue::eval_mod(std::uint64_t ell, std::uint64_t root) const {
  std::uint64_t acc = 0, power = 1;
  for (auto c : coeffs_) {
    std::int64_t reduced = c % static_cast<std::int64_t>(ell);
    if (reduced < 0) reduced += static_cast<std::int64_t>(ell);
    acc = (acc + mulmod(static_cast<std::uint64_t>(reduced), power, ell)) % ell;
    power = mulmod(power, root, ell);
  }
  return acc;
}

std::string CyclotomicValue::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? "+" : "");
    first = false;
    if (k == 0) {
      out << c;
    } else {
      if (c == -1) out << "-";
      else if (c != 1) out << c << "*";
      out << "z" << modulus_ << (k > 1 ? "^" + std::to_string(k) : "");
    }
  }
  if (first) out << "0";
  return out.str();
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& other) {
  if (other.modulus_ != modulus_) {
    const auto common = lcm_u64(modulus_, other.modulus_);
    *this = embed(common);
    return *this += other.embed(common);
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& other) { return *this += -other; }

CyclotomicValue& CyclotomicValue::operator*=(const CyclotomicValue& other) {
  if (other.modulus_ != modulus_) {
    const auto common = lcm_u64(modulus_, other.modulus_);
    *this = embed(common);
    return *this *= other.embed(common);
  }
  std::vector<std::int64_t> product(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = reduce(std::move(product), modulus_);
  return *this;
}

CyclotomicValue CyclotomicValue::operator-() const { return scaled(-1); }

CyclotomicValue CyclotomicValue::scaled(std::int64_t factor) const {
  CyclotomicValue out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.modulus_ == b.modulus_) return a.coeffs_ == b.coeffs_;
  const auto common = lcm_u64(a.modulus_, b.modulus_);
  return a.embed(common).coeffs_ == b.embed(common).coeffs_;
}

}  // namespace regrep
