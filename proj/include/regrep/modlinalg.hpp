#pragma once

#include <cstdint>
#include <vector>

namespace regrep::modl {

// Dense linear algebra and polynomials over F_ell, ell < 2^26 prime. Row
// operations go through the dispatched SIMD kernels.

using Row = std::vector<std::uint32_t>;
using ModPoly = std::vector<std::uint32_t>;  // constant first, trimmed

// In-place reduced row echelon form; drops zero rows; returns pivot columns.
std::vector<int> rref(std::vector<Row>& rows, std::uint32_t ell);
// Basis of {v : A v = 0} for A given by rows of length n.
std::vector<Row> nullspace(std::vector<Row> A, int n, std::uint32_t ell);

// Characteristic polynomial det(x I - A) via Hessenberg reduction; monic.
ModPoly charpoly(std::vector<Row> A, std::uint32_t ell);

void trim(ModPoly& f);
ModPoly mul(const ModPoly& f, const ModPoly& g, std::uint32_t ell);
ModPoly rem(const ModPoly& f, const ModPoly& g, std::uint32_t ell);
ModPoly quo(const ModPoly& f, const ModPoly& g, std::uint32_t ell);
ModPoly gcd(ModPoly f, ModPoly g, std::uint32_t ell);  // monic
ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& modulus, std::uint32_t ell);

// Distinct roots in F_ell, ascending.
std::vector<std::uint32_t> roots(const ModPoly& f, std::uint32_t ell);

}  // namespace regrep::modl
