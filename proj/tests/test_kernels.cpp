#include "doctest.h"

#include <random>
#include <vector>

#include "regrep/kernels.hpp"

using namespace regrep::kernels;

TEST_CASE("avx2 kernels agree with scalar reference") {
  if (!avx2_available()) return;
  std::mt19937 rng(7);
  for (std::uint32_t ell : {7u, 97u, 40961u, 65537u, 67108837u}) {
    std::uniform_int_distribution<std::uint32_t> dist(0, ell - 1);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 1000u, 9001u}) {
      std::vector<std::uint32_t> x(n), y(n);
      for (auto& v : x) v = dist(rng);
      for (auto& v : y) v = dist(rng);
      const std::uint32_t a = dist(rng);
      auto y1 = y, y2 = y;
      axpy_mod_scalar(y1.data(), x.data(), a, n, ell);
      axpy_mod_avx2(y2.data(), x.data(), a, n, ell);
      CHECK(y1 == y2);
      auto x1 = x, x2 = x;
      scale_mod_scalar(x1.data(), a, n, ell);
      scale_mod_avx2(x2.data(), a, n, ell);
      CHECK(x1 == x2);
      CHECK(dot_mod_scalar(x.data(), y.data(), n, ell) == dot_mod_avx2(x.data(), y.data(), n, ell));
    }
    // Extremes: every entry ell - 1.
    std::vector<std::uint32_t> big(20000, ell - 1);
    CHECK(dot_mod_scalar(big.data(), big.data(), big.size(), ell) == dot_mod_avx2(big.data(), big.data(), big.size(), ell));
    auto b1 = big, b2 = big;
    axpy_mod_scalar(b1.data(), big.data(), ell - 1, big.size(), ell);
    axpy_mod_avx2(b2.data(), big.data(), ell - 1, big.size(), ell);
    CHECK(b1 == b2);
  }
}
