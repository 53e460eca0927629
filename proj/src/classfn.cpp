#include "regrep/classfn.hpp"

#include <numeric>

#include "regrep/error.hpp"
#include "regrep/modular.hpp"

namespace regrep {

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

ClassFunction::ClassFunction(GroupPtr group, std::vector<CyclotomicValue> values)
    : group_(std::move(group)), values_(std::move(values)) {
  require(values_.size() == group_->class_count(), ErrorCode::ShapeMismatch, "one value per class required");
}

ClassFunction ClassFunction::constant(GroupPtr group, std::int64_t value) {
  const auto k = group->class_count();
  return ClassFunction(std::move(group), std::vector<CyclotomicValue>(k, CyclotomicValue(value)));
}

ClassFunction ClassFunction::from_linear_exponents(GroupPtr group, std::uint64_t modulus,
                                                   const std::vector<std::uint64_t>& exponents) {
  require(exponents.size() == group->order(), ErrorCode::ShapeMismatch, "one exponent per element required");
  const auto& cls = group->classes();
  std::vector<CyclotomicValue> values;
  values.reserve(cls.reps.size());
  for (std::size_t c = 0; c < cls.reps.size(); ++c) {
    const auto e = exponents[cls.members[c].front()];
    for (auto i : cls.members[c])
      require(exponents[i] == e, ErrorCode::CheckFailed, "linear character is not a class function");
    values.push_back(CyclotomicValue::root_of_unity(modulus, e % modulus));
  }
  return ClassFunction(std::move(group), std::move(values));
}

void ClassFunction::check_same_group(const ClassFunction& other) const {
  require(group_ == other.group_ || group_->elements() == other.group_->elements(), ErrorCode::SpecMismatch,
          "class functions on different groups");
}

ClassFunction ClassFunction::operator+(const ClassFunction& other) const {
  check_same_group(other);
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& other) const {
  check_same_group(other);
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= other.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator*(const ClassFunction& other) const {
  check_same_group(other);
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= other.values_[i];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::conj() const {
  auto v = values_;
  for (auto& x : v) x = x.conj();
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::scaled(std::int64_t k) const {
  auto v = values_;
  for (auto& x : v) x = x.scaled(k);
  return ClassFunction(group_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& other) const {
  if (!(group_ == other.group_ || group_->elements() == other.group_->elements())) return false;
  return values_ == other.values_;
}

ClassFunction ClassFunction::restrict_to(const GroupPtr& H) const {
  std::vector<CyclotomicValue> v;
  const auto& reps = H->classes().reps;
  v.reserve(reps.size());
  for (Key h : reps) {
    const auto idx = group_->index_of(h);
    require(idx >= 0, ErrorCode::NotASubgroup, "restriction target is not a subgroup");
    v.push_back(values_[group_->classes().class_of[idx]]);
  }
  return ClassFunction(H, std::move(v));
}

ClassFunction ClassFunction::induce_to(const GroupPtr& G) const {
  const Group& H = *group_;
  require(G->order() % H.order() == 0 && H.is_subgroup_of(*G), ErrorCode::NotASubgroup, "induction source is not a subgroup");
  const auto T = left_transversal(*G, H);
  const auto& codec = *G->codec();
  std::vector<Key> t_inv(T.size());
  for (std::size_t i = 0; i < T.size(); ++i) t_inv[i] = codec.inv(T[i]);
  const auto& reps = G->classes().reps;
  std::vector<CyclotomicValue> v(reps.size());
  const auto& hcls = H.classes();
  for (std::size_t c = 0; c < reps.size(); ++c) {
    // Accumulate class multiplicities first, then one scaled add per H-class.
    std::vector<std::int64_t> hits(hcls.reps.size(), 0);
    for (std::size_t i = 0; i < T.size(); ++i) {
      const auto idx = H.index_of(codec.mul(codec.mul(t_inv[i], reps[c]), T[i]));
      if (idx >= 0) ++hits[hcls.class_of[idx]];
    }
    CyclotomicValue acc;
    for (std::size_t hc = 0; hc < hits.size(); ++hc)
      if (hits[hc] != 0) acc += values_[hc].scaled(hits[hc]);
    v[c] = std::move(acc);
  }
  return ClassFunction(G, std::move(v));
}

std::vector<std::uint32_t> ClassFunction::eval_mod(std::uint64_t ell, std::uint64_t root, std::uint64_t root_order) const {
  std::vector<std::uint32_t> out;
  out.reserve(values_.size());
  for (const auto& x : values_) {
    require(root_order % x.modulus() == 0, ErrorCode::SpecMismatch, "root order is not a multiple of the value modulus");
    out.push_back(static_cast<std::uint32_t>(x.eval_mod(ell, powmod(root, root_order / x.modulus(), ell))));
  }
  return out;
}

Rational inner(const ClassFunction& a, const ClassFunction& b) {
  require(a.group() == b.group() || a.group()->elements() == b.group()->elements(), ErrorCode::SpecMismatch,
          "inner product of class functions on different groups");
  const auto& cls = a.group()->classes();
  CyclotomicValue acc;
  for (std::size_t c = 0; c < cls.reps.size(); ++c)
    acc += (a.at_class(c) * b.at_class(c).conj()).scaled(static_cast<std::int64_t>(cls.sizes[c]));
  const std::int64_t num = acc.rational_value();
  const auto order = static_cast<std::int64_t>(a.group()->order());
  const std::int64_t g = std::gcd(num, order);
  return Rational{num / g, order / g};
}

std::int64_t inner_int(const ClassFunction& a, const ClassFunction& b) {
  const Rational r = inner(a, b);
  require(r.is_integer(), ErrorCode::CheckFailed, "inner product " + r.to_string() + " is not an integer");
  return r.num;
}

}  // namespace regrep
