#pragma once

#include <cstdint>
#include <vector>

#include "regrep/classfn.hpp"
#include "regrep/group.hpp"

namespace regrep {

// Linear character x -> zeta_modulus^exps[i] on an enumerated group, indexed
// like group->elements().
struct LinearChar {
  GroupPtr group;
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> exps;

  static LinearChar trivial(GroupPtr group);
  std::uint64_t at(Key key) const;
  LinearChar restrict_to(const GroupPtr& H) const;
  // Same character with values written over zeta_m for a multiple m of modulus.
  LinearChar with_modulus(std::uint64_t m) const;
  ClassFunction to_class_function() const;
  bool is_homomorphism() const;  // checked on generators
  // Equal as functions (moduli may differ).
  bool same_as(const LinearChar& other) const;
};

// Every linear character of G restricting to chi on a subgroup N. Throws
// NotStable when N is normal but chi is not G-invariant, and
// ObstructionNonzero when chi is nontrivial on [G,G] n N. The result is sorted
// and has [G : N[G,G]] members.
std::vector<LinearChar> extend_linear_through_abelianization(const GroupPtr& G, const LinearChar& chi);

}  // namespace regrep
