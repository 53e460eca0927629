#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regrep/mat.hpp"
#include "regrep/parahoric.hpp"
#include "regrep/ringpoly.hpp"

namespace regrep {

// lambda = (d_1^{m_1}, ..., d_h^{m_h}) with the irreducible factor f_i of each part.
struct PartitionPart {
  Poly f;  // monic irreducible over F_q
  int d = 0;
  int m = 0;
};

struct Partition {
  std::vector<PartitionPart> parts;

  int n() const;
  int e() const;  // number of blocks, m_1 + ... + m_h
  // Block sizes in matrix order: m_1 copies of d_1, then m_2 copies of d_2, ...
  Flag flag() const;
  std::string to_string() const;
};

// Factor a monic polynomial over the residue field (coefficients as residue indices).
Partition partition_of(const RingPtr& residue_ring, const Poly& char_poly);

// Partition of the characteristic polynomial of beta_bar (a matrix over a ring
// with r = 1) and the minimal parahoric it determines over `target`.
struct Amin {
  Partition lambda;
  Parahoric parahoric;
};
Amin amin_from_residue(const Mat& beta_bar, const RingPtr& target);

// Adjoint orbit at some level, with a representative over o_level.
struct OrbitRep {
  int level = 0;
  Mat rep;
  bool regular = false;
  Poly char_poly;

  std::string key() const;
};

// One companion matrix per monic degree-n polynomial over `ring`.
std::vector<OrbitRep> regular_class_list(const RingPtr& ring, int n);
OrbitRep orbit_from_matrix(const Mat& x);

// "orbit:charpoly=x^2+x+1,level=1" ("orbit:" optional; level defaults to `default_level`).
OrbitRep parse_orbit(std::string_view text, const RingPtr& full_ring, int n, int default_level);

// beta over o_r lifting an orbit, in A_min with residue block form
// f_1 blocks (m_1 copies), ..., f_h blocks (m_h copies).
struct BlockForm {
  Mat beta;
  Partition lambda;
  std::vector<Mat> residue_blocks;  // the diagonal blocks of beta_bar, in order
};
BlockForm choose_beta(const OrbitRep& orbit, const RingPtr& target);

// Characteristic polynomial of reduce(beta, level), formatted; throws NotRegular.
std::string orbit_key(const Mat& beta, int level);

// q-log of |C(beta_m)| inside A_min / P_min, counted over the block-diagonal residue algebra.
int residue_centralizer_log(const BlockForm& form);

}  // namespace regrep
