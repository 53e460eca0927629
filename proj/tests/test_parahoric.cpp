#include "doctest.h"

#include "regrep/error.hpp"
#include "regrep/parahoric.hpp"

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

std::uint64_t matrix_count(const RingPtr& R, int n) {
  std::uint64_t total = 1;
  for (int k = 0; k < n * n; ++k) total *= R->size();
  return total;
}

Vec apply(const RingPtr& R, const Mat& x, const Vec& v) {
  const int n = static_cast<int>(v.size());
  Vec out(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out[a] = R->add(out[a], R->mul(x(a, b), v[b]));
  return out;
}

}  // namespace

TEST_CASE("flags parse and enumerate") {
  const auto f = Flag::parse("flag:2,1");
  CHECK(f.blocks == std::vector<int>{2, 1});
  CHECK(f.n() == 3);
  CHECK(f.rank(0) == 3);
  CHECK(f.rank(1) == 2);
  CHECK(f.rank(2) == 0);
  CHECK(Flag::parse("1,1").to_string() == "flag:1,1");
  CHECK_THROWS_AS(Flag::parse("flag:1,,1"), Error);
  CHECK_THROWS_AS(Flag::parse("flag:0"), Error);
  CHECK(all_flags(1).size() == 1);
  CHECK(all_flags(3).size() == 4);
}

TEST_CASE("Iwahori over Z/4: sizes and patterns") {
  const Parahoric P(ring("Zp:p=2,r=2"), Flag::parse("1,1"));
  CHECK(P.lattice(0).size() == 16);
  CHECK(P.lattice(1).size() == 8);
  CHECK(P.lattice(2).size() == 4);
  CHECK(P.lattice(4).size() == 1);
  CHECK(P.radical_power(0).size() == 256 / 2);
  CHECK(P.radical_power(4).size() == 1);
  // P^1 needs valuation 1 on the diagonal and below it; A needs it below.
  CHECK(P.required_valuation(1, 0, 0) == 1);
  CHECK(P.required_valuation(1, 0, 1) == 0);
  CHECK(P.required_valuation(1, 1, 0) == 1);
  CHECK(P.required_valuation(1, 1, 1) == 1);
  CHECK(P.required_valuation(0, 1, 0) == 1);
  CHECK(P.required_valuation(0, 0, 1) == 0);
  CHECK_THROWS_AS(P.in_radical_power(5, Mat::identity(P.ring(), 2)), Error);
}

TEST_CASE("maximal parahoric: congruence subgroup orders") {
  const auto R = ring("Zp:p=2,r=3");
  const Parahoric P(R, Flag::maximal(2));
  const MatCodec codec(R, 2);
  CHECK(P.enumerate_units(codec, 1, 1u << 20).size() == 256);
  CHECK(P.enumerate_units(codec, 2, 1u << 20).size() == 16);
  CHECK(P.enumerate_units(codec, 0, 1u << 20).size() == 1536);
  CHECK_THROWS_AS(P.enumerate_units(codec, 1, 100), Error);
}

TEST_CASE("Iwahori units over Z/8 match a brute-force filter") {
  const auto R = ring("Zp:p=2,r=3");
  const Parahoric P(R, Flag::parse("1,1"));
  const MatCodec codec(R, 2);
  std::size_t brute = 0;
  for (std::uint64_t i = 0; i < matrix_count(R, 2); ++i) {
    const Mat m = matrix_from_index(R, 2, i);
    if (m.is_invertible() && R->valuation(m(1, 0)) >= 1) ++brute;
  }
  CHECK(P.enumerate_units(codec, 0, 1u << 20).size() == brute);
}

TEST_CASE("stabilizer algebra matches a scan of M_2(Z/4)") {
  const auto R = ring("Zp:p=2,r=2");
  const Parahoric P(R, Flag::parse("1,1"));
  const auto L0 = P.lattice(0).elements(1000), L1 = P.lattice(1).elements(1000), L2 = P.lattice(2).elements(1000);
  for (std::uint64_t i = 0; i < matrix_count(R, 2); ++i) {
    const Mat x = matrix_from_index(R, 2, i);
    bool stab = true, rad = true;
    for (const auto& v : L0) {
      stab &= P.lattice(0).contains(apply(R, x, v));
      rad &= P.lattice(1).contains(apply(R, x, v));
    }
    for (const auto& v : L1) {
      stab &= P.lattice(1).contains(apply(R, x, v));
      rad &= P.lattice(2).contains(apply(R, x, v));
    }
    CHECK(P.in_radical_power(0, x) == stab);
    CHECK(P.in_radical_power(1, x) == rad);
  }
  (void)L2;
}

TEST_CASE("trace duality matches a scan over F_2[t]/t^2") {
  const auto R = ring("Fqt:p=2,f=1,r=2");
  const Parahoric P(R, Flag::parse("1,1"));
  const int top = P.e() * (P.r() - 1) + 1;
  for (int i = 0; i <= top; ++i) {
    const auto Pi = P.radical_power(i).elements(1u << 12);
    for (std::uint64_t idx = 0; idx < matrix_count(R, 2); ++idx) {
      const Mat x = matrix_from_index(R, 2, idx);
      bool annihilates = true;
      for (const auto& y : Pi) annihilates &= (vec_to_mat(R, 2, y) * x).trace() == 0;
      CHECK(annihilates == P.in_radical_power(top - i, x));
    }
  }
}

TEST_CASE("filtration checks pass for small parahorics") {
  for (const char* spec : {"Zp:p=2,r=2", "Zp:p=3,r=2", "Fqt:p=2,f=1,r=2"})
    for (int n = 1; n <= 3; ++n)
      for (const auto& flag : all_flags(n)) {
        const Parahoric P(ring(spec), flag);
        Ledger ledger;
        check_lattice_chain(P, ledger);
        check_parahoric_pi(P, ledger);
        check_radical_powers(P, ledger);
        check_shift(P, ledger);
        check_ap_formulae(P, ledger);
        check_trace_duality(P, ledger);
        check_abelian_filtration(P, ledger);
        if (n <= 2) check_commutator_filtration(P, ledger, 2000, 1u << 16);
        for (const auto& e : ledger.entries()) {
          INFO(e.lemma << " " << e.instance << " " << e.detail);
          CHECK(e.passed);
        }
      }
}
