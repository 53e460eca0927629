#pragma once

#include <cstddef>
#include <cstdint>

namespace regrep::kernels {

// Vector kernels over F_ell with ell < 2^26. Entries are reduced residues
// stored as uint32. The scalar versions are the reference; the AVX2 versions
// must agree bit for bit.

// y[i] = (y[i] + a * x[i]) mod ell
void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell);
// x[i] = (a * x[i]) mod ell
void scale_mod_scalar(std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell);
// sum_i x[i] * y[i] mod ell
std::uint32_t dot_mod_scalar(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t ell);

void axpy_mod_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell);
void scale_mod_avx2(std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell);
std::uint32_t dot_mod_avx2(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t ell);

enum class Backend { Scalar, Avx2 };

// Best backend the running CPU supports (overridable with REGREP_KERNELS=scalar).
Backend active_backend();
const char* backend_name(Backend backend);
bool avx2_available();

// Dispatched entry points.
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell);
void scale_mod(std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell);
std::uint32_t dot_mod(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t ell);

}  // namespace regrep::kernels
