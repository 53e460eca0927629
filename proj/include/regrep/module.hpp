#pragma once

#include <cstdint>
#include <vector>

#include "regrep/mat.hpp"
#include "regrep/ring.hpp"

namespace regrep {

using Vec = std::vector<Ring::Value>;

// Submodule of o_r^n held in Howell form: rows in echelon order, each pivot
// normalized to varpi^v, entries above a pivot reduced below varpi^v, and
// closed under the annihilator saturation so the form is unique.
class ModuleBasis {
 public:
  ModuleBasis(RingPtr ring, int dim);  // zero module

  static ModuleBasis span(RingPtr ring, int dim, const std::vector<Vec>& generators);
  static ModuleBasis full(RingPtr ring, int dim);

  const RingPtr& ring() const { return ring_; }
  int dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivot_columns() const { return pivots_; }

  bool contains(const Vec& v) const;
  // log_q of the module size.
  int log_size() const;
  std::uint64_t size() const;
  // Smith exponents v_i: the module is the direct sum of varpi^(v_i) o_r, sorted ascending.
  std::vector<int> type() const;
  int free_rank() const;

  bool is_subset_of(const ModuleBasis& other) const;
  ModuleBasis operator+(const ModuleBasis& other) const;
  ModuleBasis scaled_by_pi(int k) const;
  bool operator==(const ModuleBasis& other) const;

  // All elements (requires a small module).
  std::vector<Vec> elements(std::uint64_t cap = 1u << 22) const;

 private:
  RingPtr ring_;
  int dim_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// {x in o^m : x A in L}, A given as m rows of length n; L a submodule of o^n.
ModuleBasis preimage(RingPtr ring, const std::vector<Vec>& A, const ModuleBasis& L);
// {x in o^m : x A = 0}.
ModuleBasis kernel(RingPtr ring, const std::vector<Vec>& A);

// Matrices as vectors of length N^2 (row-major).
Vec mat_to_vec(const Mat& m);
Mat vec_to_mat(RingPtr ring, int n, const Vec& v);

// Solution module of X beta = beta X inside M_N(o_level), over the truncated ring.
ModuleBasis centralizer_module(const Mat& beta, int level);

}  // namespace regrep
