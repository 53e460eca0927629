#include "regrep/linear.hpp"

#include <algorithm>
#include <deque>

#include "regrep/error.hpp"
#include "regrep/modular.hpp"

namespace regrep {

LinearChar LinearChar::trivial(GroupPtr group) {
  const auto n = group->order();
  return {std::move(group), 1, std::vector<std::uint64_t>(n, 0)};
}

std::uint64_t LinearChar::at(Key key) const {
  const auto i = group->index_of(key);
  require(i >= 0, ErrorCode::NotASubgroup, "element outside the character's group");
  return exps[i];
}

LinearChar LinearChar::restrict_to(const GroupPtr& H) const {
  LinearChar out{H, modulus, {}};
  out.exps.reserve(H->order());
  for (Key k : H->elements()) out.exps.push_back(at(k));
  return out;
}

LinearChar LinearChar::with_modulus(std::uint64_t m) const {
  require(m % modulus == 0, ErrorCode::SpecMismatch, "new modulus must be a multiple");
  LinearChar out{group, m, exps};
  for (auto& e : out.exps) e *= m / modulus;
  return out;
}

ClassFunction LinearChar::to_class_function() const { return ClassFunction::from_linear_exponents(group, modulus, exps); }

bool LinearChar::is_homomorphism() const {
  const auto& codec = *group->codec();
  for (std::size_t i = 0; i < group->order(); ++i)
    for (Key g : group->generators())
      if (at(codec.mul(group->element(i), g)) != (exps[i] + at(g)) % modulus) return false;
  return true;
}

bool LinearChar::same_as(const LinearChar& other) const {
  if (group->elements() != other.group->elements()) return false;
  const auto m = lcm_u64(modulus, other.modulus);
  return with_modulus(m).exps == other.with_modulus(m).exps;
}

std::vector<LinearChar> extend_linear_through_abelianization(const GroupPtr& G, const LinearChar& chi) {
  const GroupPtr& N = chi.group;
  require(N->is_subgroup_of(*G), ErrorCode::NotASubgroup, "chi must live on a subgroup of G");
  const auto& codec = *G->codec();
  const std::uint64_t M = lcm_u64(chi.modulus, G->classes().exponent);
  const auto base = chi.with_modulus(M);
  if (N->is_normal_in(*G))
    for (Key g : G->generators()) {
      const Key gi = codec.inv(g);
      for (Key n : N->generators())
        require(base.at(codec.mul(codec.mul(g, n), gi)) == base.at(n), ErrorCode::NotStable, "chi is not G-stable");
    }
  const auto D = derived_subgroup(G);
  // chi on S = N[G,G], constant on cosets of [G,G].
  std::vector<std::int64_t> val(G->order(), -1);
  std::vector<std::uint32_t> members;
  std::deque<std::uint32_t> queue;
  for (std::size_t i = 0; i < N->order(); ++i) {
    const auto gi = static_cast<std::uint32_t>(G->index_of(N->element(i)));
    val[gi] = static_cast<std::int64_t>(base.exps[i]);
    members.push_back(gi);
    queue.push_back(gi);
  }
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (Key d : D->generators()) {
      const auto y = static_cast<std::uint32_t>(G->index_of(codec.mul(G->element(x), d)));
      if (val[y] < 0) {
        val[y] = val[x];
        members.push_back(y);
        queue.push_back(y);
      } else {
        require(val[y] == val[x], ErrorCode::ObstructionNonzero, "chi is nontrivial on [G,G] n N");
      }
    }
  }
  std::vector<std::vector<std::int64_t>> branches{std::move(val)};
  for (Key g : G->generators()) {
    const auto& ref = branches.front();
    if (ref[G->index_of(g)] >= 0) continue;
    // Least k with g^k in S; S is normal since it contains [G,G].
    std::vector<Key> powers{g};
    while (ref[G->index_of(powers.back())] < 0) powers.push_back(codec.mul(powers.back(), g));
    const auto k = powers.size();
    const std::size_t old_size = members.size();
    std::vector<std::uint32_t> fresh;
    for (std::size_t i = 0; i + 1 < k; ++i)
      for (std::size_t s = 0; s < old_size; ++s)
        fresh.push_back(static_cast<std::uint32_t>(G->index_of(codec.mul(powers[i], G->element(members[s])))));
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& b : branches) {
      const auto e = static_cast<std::uint64_t>(b[G->index_of(powers.back())]);
      require(M % k == 0 && e % k == 0, ErrorCode::ObstructionNonzero, "power condition fails in the abelian quotient");
      for (std::uint64_t j = 0; j < k; ++j) {
        const std::uint64_t c = e / k + j * (M / k);
        auto nb = b;
        std::size_t pos = 0;
        for (std::size_t i = 0; i + 1 < k; ++i)
          for (std::size_t s = 0; s < old_size; ++s, ++pos)
            nb[fresh[pos]] = static_cast<std::int64_t>(((i + 1) * c + static_cast<std::uint64_t>(b[members[s]])) % M);
        next.push_back(std::move(nb));
      }
    }
    branches = std::move(next);
    members.insert(members.end(), fresh.begin(), fresh.end());
  }
  require(members.size() == G->order(), ErrorCode::CheckFailed, "extension did not cover G");
  std::vector<LinearChar> out;
  for (auto& b : branches) {
    LinearChar ext{G, M, std::vector<std::uint64_t>(b.begin(), b.end())};
    out.push_back(std::move(ext));
  }
  std::sort(out.begin(), out.end(), [](const LinearChar& a, const LinearChar& b) { return a.exps < b.exps; });
  require(out.front().is_homomorphism(), ErrorCode::CheckFailed, "extension is not a homomorphism");
  return out;
}

}  // namespace regrep
