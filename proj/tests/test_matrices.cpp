#include "doctest.h"

#include <random>
#include <set>

#include "regrep/mat.hpp"
#include "regrep/module.hpp"

using namespace regrep;

namespace {

RingPtr ring(const char* text) { return Ring::make(RingSpec::parse(text)); }

Mat random_mat(const RingPtr& R, int n, std::mt19937& rng) {
  std::uniform_int_distribution<Ring::Value> d(0, R->size() - 1);
  Mat m(R, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

// Every matrix of M_n(R), by index.
Mat mat_from_index(const RingPtr& R, int n, std::uint64_t index) {
  Mat m(R, n);
  for (int k = 0; k < n * n; ++k) {
    m(k / n, k % n) = index % R->size();
    index /= R->size();
  }
  return m;
}

// Closure of the generators under ring scalars and addition, by breadth-first search.
std::set<Vec> brute_span(const RingPtr& R, const std::vector<Vec>& base, int dim) {
  std::vector<Vec> gens;
  for (const auto& g : base)
    for (Ring::Value c = 0; c < R->size(); ++c) {
      Vec w(dim);
      for (int i = 0; i < dim; ++i) w[i] = R->mul(c, g[i]);
      gens.push_back(w);
    }
  std::set<Vec> seen = {Vec(dim, 0)};
  std::vector<Vec> frontier = {Vec(dim, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        Vec w = v;
        for (int i = 0; i < dim; ++i) w[i] = R->add(w[i], g[i]);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("matrix arithmetic examples") {
  auto z8 = ring("Zp:p=2,r=3");
  CHECK(Mat::identity(z8, 2).trace() == 2);
  const Mat d = Mat::diagonal(z8, {1, 4});
  CHECK(d.det() == 4);
  CHECK_FALSE(d.is_invertible());
  auto f2 = ring("Zp:p=2,r=1");
  CHECK(Mat::companion(f2, Poly{1, 1, 1}).char_poly() == Poly{1, 1, 1});
  CHECK(Mat::identity(z8, 2).char_poly() == Poly{1, 6, 1});  // (x-1)^2
  CHECK(Mat::parse(z8, "[0,1;1,1]") == Mat(z8, 2, {0, 1, 1, 1}));
  CHECK_THROWS(Mat::parse(z8, "[0,1;1]"));
}

TEST_CASE("trace symmetry, Cayley-Hamilton, reduction of char poly, inverse") {
  std::mt19937 rng(11);
  for (const char* text : {"Zp:p=2,r=3", "Zp:p=3,r=2", "Fqt:p=2,f=1,r=3", "Fqt:p=2,f=2,r=2"}) {
    auto R = ring(text);
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 40; ++trial) {
        const Mat a = random_mat(R, n, rng), b = random_mat(R, n, rng);
        CHECK((a * b).trace() == (b * a).trace());
        const Poly f = a.char_poly();
        CHECK(poly::degree(f) == n);
        CHECK(a.apply_poly(f) == Mat(R, n));
        for (int i = 1; i <= R->r(); ++i) CHECK(a.reduce(i).char_poly() == poly::reduce(*R, f, i));
        CHECK((a * b).det() == R->mul(a.det(), b.det()));
        if (a.is_invertible()) CHECK(a * a.inverse() == Mat::identity(R, n));
      }
  }
}

TEST_CASE("unit group orders agree with enumeration") {
  struct Case {
    const char* ring;
    int n;
    std::uint64_t expected;
  };
  for (const auto& c : {Case{"Zp:p=2,r=2", 2, 96}, Case{"Zp:p=2,r=3", 2, 1536}, Case{"Zp:p=2,r=3", 1, 4}}) {
    auto R = ring(c.ring);
    std::uint64_t total = 1, count = 0;
    for (int k = 0; k < c.n * c.n; ++k) total *= R->size();
    for (std::uint64_t idx = 0; idx < total; ++idx) count += mat_from_index(R, c.n, idx).is_invertible();
    CHECK(count == c.expected);
    CHECK(unit_group_order(R->spec(), c.n) == c.expected);
  }
}

TEST_CASE("Howell form examples and canonicity") {
  auto z4 = ring("Zp:p=2,r=2");
  auto m = ModuleBasis::span(z4, 2, {{2, 0}, {0, 2}});
  CHECK(m.type() == std::vector<int>{1, 1});
  CHECK(m.free_rank() == 0);
  auto z8 = ring("Zp:p=2,r=3");
  CHECK(ModuleBasis::span(z8, 2, {{1, 1}}).free_rank() == 1);
  auto a = ModuleBasis::span(z8, 2, {{2, 4}, {4, 0}});
  auto b = ModuleBasis::span(z8, 2, {{4, 0}, {2, 4}});
  CHECK(a == b);
  const auto brute = brute_span(z8, {{2, 4}, {4, 0}}, 2);
  CHECK(a.size() == brute.size());
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 8; ++y) CHECK(a.contains({x, y}) == (brute.count({x, y}) > 0));
}

TEST_CASE("Howell form against brute-force spans") {
  std::mt19937 rng(5);
  for (const char* text : {"Zp:p=2,r=3", "Zp:p=3,r=2", "Fqt:p=2,f=1,r=3"}) {
    auto R = ring(text);
    std::uniform_int_distribution<Ring::Value> d(0, R->size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
      const int dim = 2 + trial % 2;
      std::vector<Vec> gens(1 + trial % 3, Vec(dim));
      for (auto& g : gens)
        for (auto& x : g) x = R->shift_up(d(rng), static_cast<int>(d(rng) % R->r()));
      const auto M = ModuleBasis::span(R, dim, gens);
      const auto brute = brute_span(R, gens, dim);
      CHECK(M.size() == brute.size());
      const auto elems = M.elements();
      CHECK(std::set<Vec>(elems.begin(), elems.end()) == brute);
      // Permuted generators give the identical form.
      std::vector<Vec> rev(gens.rbegin(), gens.rend());
      CHECK(ModuleBasis::span(R, dim, rev) == M);
      CHECK(ModuleBasis::span(R, dim, elems) == M);
    }
  }
}

TEST_CASE("kernel and preimage against brute force") {
  std::mt19937 rng(9);
  auto R = ring("Zp:p=2,r=2");
  std::uniform_int_distribution<Ring::Value> d(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vec> A(3, Vec(2));
    for (auto& row : A)
      for (auto& x : row) x = d(rng);
    const auto L = ModuleBasis::span(R, 2, {{2, static_cast<Ring::Value>(d(rng))}});
    const auto K = kernel(R, A);
    const auto P = preimage(R, A, L);
    std::uint64_t k_count = 0, p_count = 0;
    for (std::uint64_t idx = 0; idx < 64; ++idx) {
      Vec x = {idx % 4, idx / 4 % 4, idx / 16};
      Vec y(2, 0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) y[j] = R->add(y[j], R->mul(x[i], A[i][j]));
      const bool in_kernel = y == Vec{0, 0};
      CHECK(K.contains(x) == in_kernel);
      CHECK(P.contains(x) == L.contains(y));
      k_count += in_kernel;
      p_count += L.contains(y);
    }
    CHECK(K.size() == k_count);
    CHECK(P.size() == p_count);
  }
}

TEST_CASE("centralizer modules") {
  auto z8 = ring("Zp:p=2,r=3");
  const Mat beta = Mat::companion(z8, Poly{0, 0, 1});
  const auto C = centralizer_module(beta, 3);
  CHECK(C.free_rank() == 2);
  CHECK(C == ModuleBasis::span(z8, 4, {mat_to_vec(Mat::identity(z8, 2)), mat_to_vec(beta)}));
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < 4096; ++idx) {
    const Mat x = mat_from_index(z8, 2, idx);
    const bool commutes = x * beta == beta * x;
    count += commutes;
    CHECK(C.contains(mat_to_vec(x)) == commutes);
  }
  CHECK(C.size() == count);
  CHECK(centralizer_module(Mat::scalar(z8, 2, 3), 2).free_rank() == 4);
  auto f3 = ring("Zp:p=3,r=1");
  CHECK(centralizer_module(Mat::companion(f3, Poly{1, 0, 1}), 1).size() == 9);  // q^N
}

TEST_CASE("regularity over M_2(F_2) and M_3(Z/4) residues") {
  auto f2 = ring("Zp:p=2,r=1");
  int regular = 0;
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    const Mat a = mat_from_index(f2, 2, idx);
    const bool reg = is_regular(a);
    // Oracle: a 2x2 matrix is regular iff it is not scalar.
    CHECK(reg == !(a(0, 1) == 0 && a(1, 0) == 0 && a(0, 0) == a(1, 1)));
    // Centralizer dimension N exactly for regular elements.
    CHECK((centralizer_module(a, 1).size() == 4) == reg);
    regular += reg;
  }
  CHECK(regular == 14);
  CHECK_FALSE(is_regular(Mat::identity(f2, 2)));
  CHECK(is_regular(Mat::companion(f2, Poly{0, 0, 1})));
  auto z4 = ring("Zp:p=2,r=2");
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat a = random_mat(z4, 3, rng);
    CHECK(is_regular(a) == (centralizer_module(a, 1).size() == 8));
  }
}
