#pragma once

#include <cstdint>
#include <vector>

#include "regrep/classfn.hpp"
#include "regrep/linear.hpp"
#include "regrep/modlinalg.hpp"

namespace regrep {

// J/H as an F_p-space with the alternating form b(x, y) given by
// theta([x, y]) = zeta_p^b(x, y).
class SymplecticSpace {
 public:
  // Throws NotElementaryAbelian when J/H is not an elementary abelian p-group
  // and CheckFailed when theta on a commutator is not a p-th root of unity.
  SymplecticSpace(GroupPtr J, GroupPtr H, LinearChar theta, std::uint64_t p);

  const GroupPtr& J() const { return J_; }
  const GroupPtr& H() const { return H_; }
  const LinearChar& theta() const { return theta_; }
  std::uint64_t p() const { return p_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Key>& basis() const { return basis_; }  // coset representatives
  const std::vector<modl::Row>& gram() const { return gram_; }
  const std::vector<modl::Row>& radical() const { return radical_; }
  int radical_dim() const { return static_cast<int>(radical_.size()); }

  modl::Row coordinates(Key x) const;
  // b(x, y) from theta([x, y]).
  std::uint32_t form(Key x, Key y) const;
  // Subgroup of J above a subspace of J/H (rows need not be reduced).
  GroupPtr preimage(const std::vector<modl::Row>& subspace) const;
  // Greedy maximal isotropic subspace containing the radical.
  std::vector<modl::Row> lagrangian() const;
  // b(x, yz) = b(x, y) + b(x, z) on sampled triples, and invariance under H-shifts of the basis.
  bool check_bilinear(std::uint64_t samples = 2000) const;

 private:
  GroupPtr J_, H_;
  LinearChar theta_;
  std::uint64_t p_;
  std::vector<Key> basis_;
  std::vector<std::uint32_t> packed_;  // per element of J: coordinates packed base p
  std::vector<modl::Row> gram_;
  std::vector<modl::Row> radical_;
};

struct HeisenbergLift {
  GroupPtr R;  // preimage of the radical
  GroupPtr L;  // preimage of a Lagrangian
  LinearChar theta_L;
  ClassFunction eta;
};

// The unique irreducible of J above theta_tilde (a linear character of R
// extending theta), built as Ind_L^J of an extension to L. Verifies
// <eta, eta> = 1, deg eta = [J : R]^(1/2), Res_H eta = deg(eta) theta and
// Ind_R^J theta_tilde = deg(eta) eta.
HeisenbergLift heisenberg_lift(const SymplecticSpace& S, const LinearChar& theta_tilde);

}  // namespace regrep
