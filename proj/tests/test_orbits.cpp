#include "doctest.h"

#include <map>
#include <numeric>
#include <set>

#include "regrep/error.hpp"
#include "regrep/orbits.hpp"
#include "regrep/packed.hpp"

using namespace regrep;

namespace {

RingPtr ring(const char* text) { return Ring::make(RingSpec::parse(text)); }

Mat matrix_from_index(const RingPtr& R, int n, std::uint64_t idx) {
  Mat m(R, n);
  for (int k = 0; k < n * n; ++k) {
    m(k / n, k % n) = idx % R->size();
    idx /= R->size();
  }
  return m;
}

std::uint64_t index_of(const Mat& m) {
  std::uint64_t idx = 0;
  for (int k = m.n() * m.n() - 1; k >= 0; --k) idx = idx * m.ring()->size() + m(k / m.n(), k % m.n());
  return idx;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

// Conjugacy classes of M_n(R) under GL_n(R), via elementary generators.
std::vector<std::uint32_t> adjoint_classes(const RingPtr& R, int n) {
  std::uint64_t total = 1;
  for (int k = 0; k < n * n; ++k) total *= R->size();
  std::vector<Mat> gens;
  for (Ring::Value a = 1; a < R->size(); ++a) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          Mat g = Mat::identity(R, n);
          g(i, j) = a;
          gens.push_back(g);
        }
    if (R->is_unit(a)) {
      Mat g = Mat::identity(R, n);
      g(0, 0) = a;
      gens.push_back(g);
    }
  }
  std::vector<Mat> invs;
  for (const auto& g : gens) invs.push_back(g.inverse());
  UnionFind uf(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Mat x = matrix_from_index(R, n, idx);
    for (std::size_t k = 0; k < gens.size(); ++k) uf.join(idx, index_of(gens[k] * x * invs[k]));
  }
  std::vector<std::uint32_t> cls(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) cls[idx] = uf.find(idx);
  return cls;
}

// Regular classes are separated by characteristic polynomial and there is one per monic polynomial.
void check_char_poly_classifies(const RingPtr& R, int n) {
  const auto cls = adjoint_classes(R, n);
  std::map<std::uint32_t, std::string> key_of_class;
  std::map<std::string, std::uint32_t> class_of_key;
  for (std::uint64_t idx = 0; idx < cls.size(); ++idx) {
    const Mat x = matrix_from_index(R, n, idx);
    if (!is_regular(x)) continue;
    const auto key = orbit_key(x, R->r());
    auto [it, fresh] = key_of_class.emplace(cls[idx], key);
    CHECK(it->second == key);
    auto [jt, fresh2] = class_of_key.emplace(key, cls[idx]);
    CHECK(jt->second == cls[idx]);
    (void)fresh;
    (void)fresh2;
  }
  CHECK(class_of_key.size() == regular_class_list(R, n).size());
}

}  // namespace

TEST_CASE("partitions from residue char polys") {
  const auto F2 = ring("Zp:p=2,r=1");
  const auto R = ring("Zp:p=2,r=3");
  auto a = amin_from_residue(Mat::companion(F2, poly::parse(*F2, "x^2+x+1")), R);
  CHECK(a.lambda.to_string() == "(2)");
  CHECK(a.lambda.e() == 1);
  CHECK(a.parahoric.e() == 1);
  a = amin_from_residue(Mat::diagonal(F2, {0, 1}), R);
  CHECK(a.lambda.to_string() == "(1,1)");
  CHECK(a.lambda.e() == 2);
  a = amin_from_residue(Mat::companion(F2, poly::parse(*F2, "x^2")), R);
  CHECK(a.lambda.parts.size() == 1);
  CHECK(a.lambda.parts[0].m == 2);
  CHECK(a.lambda.e() == 2);
  CHECK(a.lambda.flag().to_string() == "flag:1,1");
  const auto p = partition_of(F2, poly::parse(*F2, "x^4+x^2+1"));
  REQUIRE(p.parts.size() == 1);
  CHECK(poly::format(p.parts[0].f) == "x^2+x+1");
  CHECK(p.parts[0].m == 2);
}

TEST_CASE("regular class lists") {
  CHECK(regular_class_list(ring("Zp:p=2,r=1"), 2).size() == 4);
  CHECK(regular_class_list(ring("Zp:p=3,r=1"), 2).size() == 9);
  CHECK(regular_class_list(ring("Zp:p=5,r=1"), 1).size() == 5);
  for (const auto& o : regular_class_list(ring("Zp:p=2,r=2"), 2)) CHECK(is_regular(o.rep));
}

TEST_CASE("orbit spec strings") {
  const auto R = ring("Zp:p=2,r=3");
  const auto o = parse_orbit("orbit:charpoly=x^2+x+1,level=1", R, 2, 1);
  CHECK(o.level == 1);
  CHECK(o.key() == "x^2+x+1");
  CHECK(parse_orbit("charpoly=x^2+3", R, 2, 2).level == 2);
  CHECK_THROWS_AS(parse_orbit("charpoly=x^3", R, 2, 1), Error);
  CHECK_THROWS_AS(parse_orbit("level=1", R, 2, 1), Error);
  CHECK_THROWS_AS(parse_orbit("charpoly=x^2,level=4", R, 2, 1), Error);
  CHECK_THROWS_AS(orbit_key(Mat::scalar(R, 2, 1), 1), Error);
}

TEST_CASE("char poly classifies regular adjoint orbits") {
  check_char_poly_classifies(ring("Zp:p=2,r=1"), 2);
  check_char_poly_classifies(ring("Zp:p=3,r=1"), 2);
  check_char_poly_classifies(ring("Zp:p=2,r=2"), 2);
  check_char_poly_classifies(ring("Zp:p=2,r=3"), 2);
  check_char_poly_classifies(ring("Zp:p=3,r=2"), 2);
  check_char_poly_classifies(ring("Fqt:p=2,f=1,r=2"), 2);
  check_char_poly_classifies(ring("Fqt:p=2,f=1,r=3"), 2);
  check_char_poly_classifies(ring("Zp:p=2,r=1"), 3);
  check_char_poly_classifies(ring("Zp:p=3,r=1"), 3);
  check_char_poly_classifies(ring("Zp:p=2,r=2"), 3);
}

TEST_CASE("regular classes of M_2(Z/4) and distinct keys") {
  const auto R = ring("Zp:p=2,r=2");
  const auto cls = adjoint_classes(R, 2);
  std::set<std::uint32_t> regular;
  for (std::uint64_t idx = 0; idx < cls.size(); ++idx)
    if (is_regular(matrix_from_index(R, 2, idx))) regular.insert(cls[idx]);
  CHECK(regular.size() == 16);
  const Mat a = Mat::companion(R, poly::parse(*R, "x^2+2x+1")), b = Mat::companion(R, poly::parse(*R, "x^2+1"));
  CHECK(orbit_key(a, 2) != orbit_key(b, 2));
  CHECK(cls[index_of(a)] != cls[index_of(b)]);
}

TEST_CASE("choose_beta lands in A_min with the block residue") {
  for (const char* spec : {"Zp:p=2,r=3", "Fqt:p=2,f=1,r=3", "Zp:p=3,r=3", "Zp:p=2,r=2", "Zp:p=2,r=5"})
    for (int n = 2; n <= 3; ++n) {
      const auto R = ring(spec);
      const int lp = R->r() / 2;
      if (n == 3 && R->size() > 8) continue;
      for (const auto& orbit : regular_class_list(R->truncated(lp), n)) {
        const auto form = choose_beta(orbit, R);
        INFO(spec << " " << orbit.key());
        CHECK(form.lambda.n() == n);
        CHECK(is_regular(form.beta));
        CHECK(orbit_key(form.beta, lp) == orbit.key());
        const Parahoric P(R, form.lambda.flag());
        CHECK(P.in_algebra(form.beta));
        // Diagonal residue blocks are the companions of the f_i in order.
        const Mat bar = form.beta.reduce(1);
        int offset = 0;
        for (const auto& blk : form.residue_blocks) {
          for (int a = 0; a < blk.n(); ++a)
            for (int b = 0; b < blk.n(); ++b) CHECK(bar(offset + a, offset + b) == blk(a, b));
          offset += blk.n();
        }
        CHECK(residue_centralizer_log(form) == n);
      }
    }
}

TEST_CASE("split orbit lifts to a diagonal-type beta") {
  const auto R = ring("Zp:p=2,r=3");
  const auto form = choose_beta(orbit_from_matrix(Mat::diagonal(R->truncated(1), {0, 1})), R);
  CHECK(R->valuation(form.beta(1, 0)) >= 1);
  CHECK(R->reduce(form.beta(0, 0), 1) == 0);
  CHECK(R->reduce(form.beta(1, 1), 1) == 1);
}

TEST_CASE("centralizers of regular betas sit in A_min") {
  for (const char* spec : {"Zp:p=2,r=3", "Fqt:p=2,f=1,r=3"}) {
    const auto R = ring(spec);
    for (const auto& orbit : regular_class_list(R->truncated(1), 2)) {
      const auto form = choose_beta(orbit, R);
      const Parahoric P(R, form.lambda.flag());
      // Exhaustive over M_2(o_r): commuting units are exactly o_r[beta]^x.
      std::size_t count = 0, poly_count = 0;
      std::set<std::vector<Ring::Value>> poly_units;
      for (Ring::Value a = 0; a < R->size(); ++a)
        for (Ring::Value b = 0; b < R->size(); ++b) {
          const Mat x = Mat::scalar(R, 2, a) + form.beta.scaled(b);
          if (x.is_invertible()) poly_units.insert(x.entries());
        }
      poly_count = poly_units.size();
      for (std::uint64_t idx = 0; idx < R->size() * R->size() * R->size() * R->size(); ++idx) {
        const Mat g = matrix_from_index(R, 2, idx);
        if (!(g * form.beta == form.beta * g) || !g.is_invertible()) continue;
        ++count;
        CHECK(P.in_algebra(g));
        CHECK(poly_units.count(g.entries()) == 1);
      }
      CHECK(count == poly_count);
    }
  }
}
