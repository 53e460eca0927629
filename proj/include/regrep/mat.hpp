#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "regrep/ring.hpp"
#include "regrep/ringpoly.hpp"

namespace regrep {

// Square N x N matrix over o_r, row-major canonical entries.
class Mat {
 public:
  Mat(RingPtr ring, int n);
  Mat(RingPtr ring, int n, std::vector<Ring::Value> entries);

  static Mat identity(RingPtr ring, int n);
  static Mat scalar(RingPtr ring, int n, Ring::Value c);
  static Mat diagonal(RingPtr ring, const std::vector<Ring::Value>& diag);
  // Companion matrix of a monic polynomial: ones on the subdiagonal, -coefficients in the last column.
  static Mat companion(RingPtr ring, const Poly& f);
  // "[0,1;1,1]"; entries are canonical indices.
  static Mat parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  int n() const { return n_; }
  Ring::Value operator()(int i, int j) const { return a_[i * n_ + j]; }
  Ring::Value& operator()(int i, int j) { return a_[i * n_ + j]; }
  const std::vector<Ring::Value>& entries() const { return a_; }

  Mat operator+(const Mat& other) const;
  Mat operator-(const Mat& other) const;
  Mat operator*(const Mat& other) const;
  Mat scaled(Ring::Value c) const;
  Mat shifted_up(int k) const;  // varpi^k * A
  Mat transpose() const;
  bool operator==(const Mat& other) const;

  Ring::Value trace() const;
  Ring::Value det() const;
  // Berkowitz (division free); monic of degree N.
  Poly char_poly() const;
  Mat inverse() const;  // throws NotAUnit
  bool is_invertible() const;
  // Minimal valuation of the entries (r for the zero matrix).
  int valuation() const;

  // Image over o_level.
  Mat reduce(int level) const;
  // Same entries viewed over a larger ring (canonical lift, digits kept).
  Mat lift_to(RingPtr ring) const;

  Mat pow(std::uint64_t e) const;
  Mat apply_poly(const Poly& f) const;

  std::string to_string() const;

 private:
  void check_shape(const Mat& other) const;

  RingPtr ring_;
  int n_;
  std::vector<Ring::Value> a_;
};

// True iff the residue of A is regular: 1, A, ..., A^(N-1) are independent over F_q.
bool is_regular(const Mat& A);

// |GL_N(o_r)| = q^((r-1) N^2) |GL_N(F_q)|.
std::uint64_t unit_group_order(const RingSpec& spec, int n);

}  // namespace regrep
