#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regrep/cyclotomic.hpp"
#include "regrep/group.hpp"

namespace regrep {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string to_string() const;
};

// Exact class function: one cyclotomic value per conjugacy class of the group,
// in the group's class order.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<CyclotomicValue> values);

  static ClassFunction constant(GroupPtr group, std::int64_t value);
  static ClassFunction trivial(GroupPtr group) { return constant(std::move(group), 1); }
  // Linear character given by exponents e(x) with value zeta_M^e(x) on every element, indexed like group->elements().
  static ClassFunction from_linear_exponents(GroupPtr group, std::uint64_t modulus, const std::vector<std::uint64_t>& exponents);

  const GroupPtr& group() const { return group_; }
  const std::vector<CyclotomicValue>& values() const { return values_; }
  const CyclotomicValue& at_class(std::size_t c) const { return values_[c]; }
  const CyclotomicValue& at(Key key) const { return values_[group_->class_of_key(key)]; }

  std::int64_t degree() const { return values_[0].rational_value(); }

  ClassFunction operator+(const ClassFunction& other) const;
  ClassFunction operator-(const ClassFunction& other) const;
  ClassFunction operator*(const ClassFunction& other) const;
  ClassFunction conj() const;
  ClassFunction scaled(std::int64_t k) const;
  bool operator==(const ClassFunction& other) const;

  // Restriction to a subgroup H of the underlying group.
  ClassFunction restrict_to(const GroupPtr& H) const;
  // Induction to an overgroup G.
  ClassFunction induce_to(const GroupPtr& G) const;

  // Image of each class value in F_ell under zeta_m -> root^(M/m) for a primitive M-th root.
  std::vector<std::uint32_t> eval_mod(std::uint64_t ell, std::uint64_t root, std::uint64_t root_order) const;

 private:
  void check_same_group(const ClassFunction& other) const;

  GroupPtr group_;
  std::vector<CyclotomicValue> values_;
};

// <a, b> = (1/|G|) sum a(g) conj(b(g)), exact.
Rational inner(const ClassFunction& a, const ClassFunction& b);
// Integer inner product; throws CheckFailed if not an integer.
std::int64_t inner_int(const ClassFunction& a, const ClassFunction& b);

}  // namespace regrep
