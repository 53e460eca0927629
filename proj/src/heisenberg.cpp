#include "regrep/heisenberg.hpp"

#include <random>

#include "regrep/error.hpp"
#include "regrep/modular.hpp"

namespace regrep {

SymplecticSpace::SymplecticSpace(GroupPtr J, GroupPtr H, LinearChar theta, std::uint64_t p)
    : J_(std::move(J)), H_(std::move(H)), theta_(std::move(theta)), p_(p) {
  require(H_->is_subgroup_of(*J_), ErrorCode::NotASubgroup, "H must be a subgroup of J");
  require(theta_.group->elements() == H_->elements(), ErrorCode::SpecMismatch, "theta must live on H");
  const auto& codec = *J_->codec();
  // Greedy basis: extend a subgroup chain H < <H, x_1> < ... one factor p at a time.
  std::vector<std::int64_t> packed(J_->order(), -1);
  std::vector<std::uint32_t> members;
  for (Key h : H_->elements()) {
    const auto i = J_->index_of(h);
    packed[i] = 0;
    members.push_back(static_cast<std::uint32_t>(i));
  }
  std::uint64_t scale = 1;
  for (std::size_t cand = 0; cand < J_->order(); ++cand) {
    if (packed[cand] >= 0) continue;
    const Key x = J_->element(cand);
    require(packed[J_->index_of(codec.pow(x, p_))] == 0, ErrorCode::NotElementaryAbelian, "x^p not in H");
    for (Key y : basis_)
      require(H_->contains(codec.commutator(x, y)), ErrorCode::NotElementaryAbelian, "J/H is not abelian");
    const std::size_t old = members.size();
    Key xi = x;
    for (std::uint64_t a = 1; a < p_; ++a, xi = codec.mul(xi, x))
      for (std::size_t s = 0; s < old; ++s) {
        const auto y = J_->index_of(codec.mul(xi, J_->element(members[s])));
        require(packed[y] < 0, ErrorCode::NotElementaryAbelian, "coset chain collided");
        packed[y] = packed[members[s]] + static_cast<std::int64_t>(a * scale);
        members.push_back(static_cast<std::uint32_t>(y));
      }
    basis_.push_back(x);
    scale *= p_;
  }
  require(members.size() == J_->order(), ErrorCode::NotElementaryAbelian, "basis does not span J/H");
  packed_.assign(packed.begin(), packed.end());
  const int d = dim();
  gram_.assign(d, modl::Row(d, 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram_[i][j] = form(basis_[i], basis_[j]);
  radical_ = modl::nullspace(gram_, d, static_cast<std::uint32_t>(p_));
}

modl::Row SymplecticSpace::coordinates(Key x) const {
  const auto i = J_->index_of(x);
  require(i >= 0, ErrorCode::NotASubgroup, "element outside J");
  modl::Row v(dim());
  auto c = packed_[i];
  for (int k = 0; k < dim(); ++k, c /= p_) v[k] = c % p_;
  return v;
}

std::uint32_t SymplecticSpace::form(Key x, Key y) const {
  const Key c = J_->codec()->commutator(x, y);
  require(H_->contains(c), ErrorCode::NotElementaryAbelian, "commutator outside H");
  const auto e = theta_.at(c);
  const auto step = theta_.modulus / p_;
  require(theta_.modulus % p_ == 0 || e == 0, ErrorCode::CheckFailed, "theta modulus not divisible by p");
  if (e == 0) return 0;
  require(e % step == 0, ErrorCode::CheckFailed, "theta on a commutator is not a p-th root of unity");
  return static_cast<std::uint32_t>(e / step);
}

namespace {

bool in_span(std::vector<modl::Row> rows, const modl::Row& v, std::uint32_t p) {
  const auto before = modl::rref(rows, p).size();
  rows.push_back(v);
  return modl::rref(rows, p).size() == before;
}

}  // namespace

GroupPtr SymplecticSpace::preimage(const std::vector<modl::Row>& subspace) const {
  auto rows = subspace;
  const auto ell = static_cast<std::uint32_t>(p_);
  const auto rank = modl::rref(rows, ell).size();
  std::vector<Key> elems;
  // Membership per packed coordinate, cached since many elements share a coset.
  std::vector<std::int8_t> memo;
  std::uint64_t cosets = 1;
  for (int k = 0; k < dim(); ++k) cosets *= p_;
  memo.assign(cosets, -1);
  for (std::size_t i = 0; i < J_->order(); ++i) {
    auto& m = memo[packed_[i]];
    if (m < 0) {
      auto ext = rows;
      ext.push_back(coordinates(J_->element(i)));
      m = modl::rref(ext, ell).size() == rank ? 1 : 0;
    }
    if (m) elems.push_back(J_->element(i));
  }
  return Group::from_elements(J_->codec(), std::move(elems));
}

std::vector<modl::Row> SymplecticSpace::lagrangian() const {
  const auto ell = static_cast<std::uint32_t>(p_);
  const int d = dim();
  std::vector<modl::Row> W = radical_;
  while (true) {
    // W-perp = {v : b(w, v) = 0 for w in W}.
    std::vector<modl::Row> eqs;
    for (const auto& w : W) {
      modl::Row row(d, 0);
      for (int j = 0; j < d; ++j) {
        std::uint64_t s = 0;
        for (int i = 0; i < d; ++i) s += static_cast<std::uint64_t>(w[i]) * gram_[i][j];
        row[j] = static_cast<std::uint32_t>(s % ell);
      }
      eqs.push_back(row);
    }
    const auto perp = eqs.empty() ? std::vector<modl::Row>{} : modl::nullspace(eqs, d, ell);
    std::vector<modl::Row> perp_basis = perp;
    if (eqs.empty())
      for (int i = 0; i < d; ++i) {
        modl::Row e(d, 0);
        e[i] = 1;
        perp_basis.push_back(e);
      }
    bool grown = false;
    for (const auto& v : perp_basis)
      if (!in_span(W, v, ell)) {
        W.push_back(v);
        grown = true;
        break;
      }
    if (!grown) break;
  }
  require(2 * W.size() == static_cast<std::size_t>(d + radical_dim()), ErrorCode::NoLagrangian,
          "isotropic subspace has the wrong dimension");
  return W;
}

bool SymplecticSpace::check_bilinear(std::uint64_t samples) const {
  const auto& codec = *J_->codec();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, J_->order() - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Key x = J_->element(pick(rng)), y = J_->element(pick(rng)), z = J_->element(pick(rng));
    if (form(x, codec.mul(y, z)) != (form(x, y) + form(x, z)) % p_) return false;
  }
  // Basis shifted by H gives the same Gram table.
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (Key h : H_->generators())
        if (form(codec.mul(basis_[i], h), basis_[j]) != gram_[i][j]) return false;
  return true;
}

HeisenbergLift heisenberg_lift(const SymplecticSpace& S, const LinearChar& theta_tilde) {
  const auto R = S.preimage(S.radical());
  require(theta_tilde.group->elements() == R->elements(), ErrorCode::SpecMismatch, "theta_tilde must live on the radical");
  const auto L = S.preimage(S.lagrangian());
  const auto theta_L = extend_linear_through_abelianization(L, theta_tilde).front();
  auto eta = theta_L.to_class_function().induce_to(S.J());
  const auto index = group_index(*S.J(), *R);
  const auto deg = isqrt(index);
  require(deg * deg == index, ErrorCode::DegenerateForm, "[J : R] is not a square");
  require(inner_int(eta, eta) == 1, ErrorCode::CheckFailed, "Heisenberg lift is reducible");
  require(eta.degree() == static_cast<std::int64_t>(deg), ErrorCode::DimensionMismatch, "Heisenberg lift has the wrong degree");
  const auto scaled = S.theta().to_class_function().scaled(static_cast<std::int64_t>(deg));
  require(eta.restrict_to(S.H()) == scaled, ErrorCode::CheckFailed, "Res_H eta is not a multiple of theta");
  const auto ind = theta_tilde.to_class_function().induce_to(S.J());
  require(ind == eta.scaled(static_cast<std::int64_t>(deg)), ErrorCode::CheckFailed, "Ind_R^J theta_tilde is not deg * eta");
  return {R, L, theta_L, std::move(eta)};
}

}  // namespace regrep
