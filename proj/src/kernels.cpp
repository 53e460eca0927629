#include "regrep/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace regrep::kernels {

void axpy_mod_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell) {
  for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(a) * x[i]) % ell);
}

void scale_mod_scalar(std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell) {
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * x[i] % ell);
}

std::uint32_t dot_mod_scalar(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t ell) {
  // Products are below 2^52, so 4096 of them fit in a uint64 before reducing.
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<std::uint64_t>(x[i]) * y[i];
    if ((i & 4095) == 4095) acc %= ell;
  }
  return static_cast<std::uint32_t>(acc % ell);
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() {
  static const Backend backend = [] {
    const char* env = std::getenv("REGREP_KERNELS");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
  }();
  return backend;
}

const char* backend_name(Backend backend) { return backend == Backend::Avx2 ? "avx2" : "scalar"; }

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell) {
  if (active_backend() == Backend::Avx2) return axpy_mod_avx2(y, x, a, n, ell);
  axpy_mod_scalar(y, x, a, n, ell);
}

void scale_mod(std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t ell) {
  if (active_backend() == Backend::Avx2) return scale_mod_avx2(x, a, n, ell);
  scale_mod_scalar(x, a, n, ell);
}

std::uint32_t dot_mod(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t ell) {
  if (active_backend() == Backend::Avx2) return dot_mod_avx2(x, y, n, ell);
  return dot_mod_scalar(x, y, n, ell);
}

}  // namespace regrep::kernels
