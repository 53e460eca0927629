#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regrep/ring.hpp"

namespace regrep {

// Dense univariate polynomial over o_r, constant coefficient first. The zero
// polynomial is the empty vector; every other value is kept trimmed.
using Poly = std::vector<Ring::Value>;

namespace poly {

void trim(Poly& f);
int degree(const Poly& f);  // -1 for zero
bool is_monic(const Poly& f);

Poly add(const Ring& R, const Poly& f, const Poly& g);
Poly sub(const Ring& R, const Poly& f, const Poly& g);
Poly mul(const Ring& R, const Poly& f, const Poly& g);
Poly scale(const Ring& R, const Poly& f, Ring::Value c);
Poly shift_up(const Ring& R, const Poly& f, int k);  // varpi^k * f
Poly derivative(const Ring& R, const Poly& f);
Ring::Value eval(const Ring& R, const Poly& f, Ring::Value x);

// Division by a polynomial with unit leading coefficient.
std::pair<Poly, Poly> divrem(const Ring& R, const Poly& f, const Poly& g);
Poly rem(const Ring& R, const Poly& f, const Poly& g);

// Coefficientwise image in o_level (a valid polynomial over R.truncated(level)).
Poly reduce(const Ring& R, const Poly& f, int level);

// Field-only operations; R must have r = 1 so that o_1 = F_q.
Poly make_monic(const Ring& F, const Poly& f);
Poly gcd(const Ring& F, Poly f, Poly g);  // monic
// Returns gcd and sets s, t with s f + t g = gcd.
Poly xgcd(const Ring& F, const Poly& f, const Poly& g, Poly& s, Poly& t);
Poly powmod(const Ring& F, const Poly& base, std::uint64_t e, const Poly& modulus);
bool is_irreducible(const Ring& F, const Poly& f);

// Complete factorization of a monic polynomial over F_q into distinct monic
// irreducibles with multiplicities, sorted by (degree, coefficients from the top).
std::vector<std::pair<Poly, int>> factor(const Ring& F, const Poly& f);

// All monic polynomials of the given degree over R, in increasing index order.
std::vector<Poly> all_monic(const Ring& R, int degree);

// Lift a factorization of the residue of a monic F into pairwise coprime monic
// factors mod varpi to a factorization F = prod G_i over o_r. Quadratic Hensel
// steps on Bezout data.
std::vector<Poly> hensel_lift(const Ring& R, const Poly& F, const std::vector<Poly>& residue_factors);

// "x^2+3x+1": coefficients are canonical ring indices; '-' negates.
Poly parse(const Ring& R, std::string_view text);
std::string format(const Poly& f, char var = 'x');

}  // namespace poly

}  // namespace regrep
