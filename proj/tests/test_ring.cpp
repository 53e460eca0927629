#include "doctest.h"

#include "regrep/error.hpp"
#include "regrep/ring.hpp"

using namespace regrep;

namespace {
RingPtr ring(const char* text) { return Ring::make(RingSpec::parse(text)); }
}  // namespace

TEST_CASE("ring construction and errors") {
  auto z8 = ring("Zp:p=2,r=3");
  CHECK(z8->size() == 8);
  CHECK(z8->uniformizer() == 2);
  auto f8 = ring("Fqt:p=2,f=1,r=3");
  CHECK(f8->size() == 8);
  CHECK(f8->uniformizer() == 2);  // t has canonical index q = 2
  auto expect_code = [](const char* text, ErrorCode code) {
    try {
      ring(text);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect_code("Zp:p=6,r=2", ErrorCode::NonPrimeP);
  expect_code("Zp:p=2,f=2,r=2", ErrorCode::BadDegree);
  expect_code("Zp:p=2,r=0", ErrorCode::BadDegree);
  expect_code("Zq:p=2,r=2", ErrorCode::ParseError);
  expect_code("Zp:p=2", ErrorCode::ParseError);
}

TEST_CASE("ring arithmetic examples") {
  auto z8 = ring("Zp:p=2,r=3");
  CHECK(z8->add(5, 6) == 3);
  CHECK(z8->mul(3, 3) == 1);
  CHECK(z8->inv(3) == 3);
  CHECK_THROWS_AS(z8->inv(4), Error);
  CHECK(z8->valuation(4) == 2);
  CHECK(z8->valuation(0) == 3);
  CHECK(z8->reduce(6, 1) == 0);
  CHECK(z8->reduce(7, 2) == 3);

  auto f8 = ring("Fqt:p=2,f=1,r=3");
  const Ring::Value one_plus_t = 1 + 2, t_plus_t2 = 2 + 4;
  CHECK(f8->mul(one_plus_t, one_plus_t) == 1 + 4);
  CHECK(f8->inv(one_plus_t) == 1 + 2 + 4);
  CHECK(f8->valuation(t_plus_t2) == 1);
  CHECK(f8->format(one_plus_t) == "1+t");
}

TEST_CASE("ring laws exhaustively on small rings") {
  for (const char* text : {"Zp:p=3,r=4", "Fqt:p=3,f=1,r=4", "Fqt:p=2,f=2,r=2", "Zp:p=2,r=3", "Fqt:p=2,f=3,r=1"}) {
    auto R = ring(text);
    const auto n = R->size();
    for (Ring::Value a = 0; a < n; ++a) {
      CHECK(R->is_unit(a) == (R->valuation(a) == 0));
      if (R->is_unit(a)) CHECK(R->mul(a, R->inv(a)) == 1);
      for (Ring::Value b = 0; b < n; ++b) {
        REQUIRE(R->valuation(R->mul(a, b)) == std::min(R->valuation(a) + R->valuation(b), R->r()));
        REQUIRE(R->psi_exponent(R->add(a, b), R->psi_order()) ==
                (R->psi_exponent(a, R->psi_order()) + R->psi_exponent(b, R->psi_order())) % R->psi_order());
      }
      for (int i = 1; i <= R->r(); ++i)
        for (int j = 1; j <= R->r(); ++j) {
          auto lower = R->truncated(i);
          CHECK(lower->reduce(R->reduce(a, i), std::min(i, j)) == R->reduce(a, std::min(i, j)));
        }
    }
    // Conductor: psi is trivial on varpi^r = 0 only, and nontrivial somewhere on p^(r-1).
    bool nontrivial = false;
    for (Ring::Value u = 1; u < R->q(); ++u)
      nontrivial |= R->psi_exponent(R->shift_up(u, R->r() - 1), R->psi_order()) != 0;
    CHECK(nontrivial);
  }
}

TEST_CASE("psi values") {
  auto z8 = ring("Zp:p=2,r=3");
  CHECK(z8->psi_fractional(0) == CyclotomicValue(1));
  CHECK(z8->psi_fractional(4) == CyclotomicValue(-1));
  CHECK(z8->psi_fractional(1) == CyclotomicValue::root_of_unity(8, 1));
}

TEST_CASE("residue field of degree 2 over F_2 uses u^2+u+1") {
  ResidueField F(2, 2);
  CHECK(F.modulus() == std::vector<std::uint64_t>{1, 1, 1});
  for (std::uint64_t a = 1; a < 4; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK(F.trace(1) == 0);
  CHECK(F.trace(2) == 1);
}
