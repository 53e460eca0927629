#include "doctest.h"

#include "regrep/cyclotomic.hpp"
#include "regrep/error.hpp"

using namespace regrep;

TEST_CASE("roots of unity") {
  const auto z4 = CyclotomicValue::root_of_unity(4, 1);
  CHECK(z4 * z4 == CyclotomicValue(-1));
  CHECK(z4 * z4 * z4 * z4 == CyclotomicValue(1));
  CHECK((z4 + z4.conj()).is_zero());
  // 1 + z3 + z3^2 = 0.
  const auto z3 = CyclotomicValue::root_of_unity(3, 1);
  CHECK((CyclotomicValue(1) + z3 + z3 * z3).is_zero());
  // Sum of all primitive 8th roots is 0, of primitive 9th roots is 0.
  CyclotomicValue s8, s9;
  for (std::uint64_t k : {1, 3, 5, 7}) s8 += CyclotomicValue::root_of_unity(8, k);
  for (std::uint64_t k : {1, 2, 4, 5, 7, 8}) s9 += CyclotomicValue::root_of_unity(9, k);
  CHECK(s8.is_zero());
  CHECK(s9.is_zero());
}

TEST_CASE("embedding keeps values") {
  const auto z4 = CyclotomicValue::root_of_unity(4, 1);
  const auto z8 = CyclotomicValue::root_of_unity(8, 2);
  CHECK(z4 == z8);
  CHECK(z4.embed(8) == z8);
  CHECK(z4.embed(12) * CyclotomicValue::root_of_unity(3, 1) == CyclotomicValue::root_of_unity(12, 7));
  CHECK_THROWS_AS(z4.embed(6), Error);
}

TEST_CASE("rational values and reduction mod ell") {
  const auto z3 = CyclotomicValue::root_of_unity(3, 1);
  const auto x = z3 + z3.conj();
  CHECK(x.is_rational());
  CHECK(x.rational_value() == -1);
  CHECK_THROWS_AS(z3.rational_value(), Error);
  // F_7 has a primitive cube root 2.
  CHECK(z3.eval_mod(7, 2) == 2);
  CHECK(x.eval_mod(7, 2) == 6);
}
