#include "regrep/modlinalg.hpp"

#include <algorithm>
#include <random>

#include "regrep/error.hpp"
#include "regrep/kernels.hpp"
#include "regrep/modular.hpp"

namespace regrep::modl {

namespace {

std::uint32_t inv(std::uint32_t a, std::uint32_t ell) { return static_cast<std::uint32_t>(invmod(a, ell)); }

std::uint32_t mulm(std::uint64_t a, std::uint64_t b, std::uint32_t ell) {
  return static_cast<std::uint32_t>(a * b % ell);
}

}  // namespace

std::vector<int> rref(std::vector<Row>& rows, std::uint32_t ell) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int n = static_cast<int>(rows[0].size());
  std::size_t rank = 0;
  for (int c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    kernels::scale_mod(rows[rank].data(), inv(rows[rank][c], ell), n, ell);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      kernels::axpy_mod(rows[i].data(), rows[rank].data(), ell - rows[i][c], n, ell);
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

std::vector<Row> nullspace(std::vector<Row> A, int n, std::uint32_t ell) {
  const auto pivots = rref(A, ell);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Row v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (ell - A[i][free]) % ell;
    basis.push_back(std::move(v));
  }
  return basis;
}

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mul(const ModPoly& f, const ModPoly& g, std::uint32_t ell) {
  if (f.empty() || g.empty()) return {};
  ModPoly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    kernels::axpy_mod(out.data() + i, g.data(), f[i], g.size(), ell);
  }
  trim(out);
  return out;
}

namespace {

void divide(const ModPoly& f, const ModPoly& g, std::uint32_t ell, ModPoly* q, ModPoly* r) {
  require(!g.empty(), ErrorCode::CheckFailed, "division by the zero polynomial");
  ModPoly rr = f;
  trim(rr);
  ModPoly qq(rr.size() >= g.size() ? rr.size() - g.size() + 1 : 0, 0);
  const std::uint32_t lead_inv = inv(g.back(), ell);
  for (std::size_t i = rr.size(); i >= g.size() && i > 0; --i) {
    const std::uint32_t c = mulm(rr[i - 1], lead_inv, ell);
    if (c == 0) continue;
    const std::size_t shift = i - g.size();
    qq[shift] = c;
    kernels::axpy_mod(rr.data() + shift, g.data(), ell - c, g.size(), ell);
  }
  trim(rr);
  trim(qq);
  if (q) *q = std::move(qq);
  if (r) *r = std::move(rr);
}

}  // namespace

ModPoly rem(const ModPoly& f, const ModPoly& g, std::uint32_t ell) {
  ModPoly r;
  divide(f, g, ell, nullptr, &r);
  return r;
}

ModPoly quo(const ModPoly& f, const ModPoly& g, std::uint32_t ell) {
  ModPoly q;
  divide(f, g, ell, &q, nullptr);
  return q;
}

ModPoly gcd(ModPoly f, ModPoly g, std::uint32_t ell) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    ModPoly r = rem(f, g, ell);
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.empty()) kernels::scale_mod(f.data(), inv(f.back(), ell), f.size(), ell);
  return f;
}

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& modulus, std::uint32_t ell) {
  ModPoly result = rem(ModPoly{1}, modulus, ell);
  ModPoly b = rem(base, modulus, ell);
  while (e > 0) {
    if (e & 1) result = rem(mul(result, b, ell), modulus, ell);
    b = rem(mul(b, b, ell), modulus, ell);
    e >>= 1;
  }
  return result;
}

ModPoly charpoly(std::vector<Row> H, std::uint32_t ell) {
  const int n = static_cast<int>(H.size());
  // Similarity transform to upper Hessenberg form.
  for (int c = 0; c + 2 < n; ++c) {
    int p = c + 1;
    while (p < n && H[p][c] == 0) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      std::swap(H[p], H[c + 1]);
      for (int i = 0; i < n; ++i) std::swap(H[i][p], H[i][c + 1]);
    }
    const std::uint32_t t_inv = inv(H[c + 1][c], ell);
    for (int j = c + 2; j < n; ++j) {
      if (H[j][c] == 0) continue;
      const std::uint32_t u = mulm(H[j][c], t_inv, ell);
      kernels::axpy_mod(H[j].data(), H[c + 1].data(), ell - u, n, ell);
      for (int i = 0; i < n; ++i) H[i][c + 1] = static_cast<std::uint32_t>((H[i][c + 1] + std::uint64_t{u} * H[i][j]) % ell);
    }
  }
  std::vector<ModPoly> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    // (x - h_mm) p_(m-1)
    ModPoly next = mul(ModPoly{(ell - H[m - 1][m - 1]) % ell, 1}, p[m - 1], ell);
    next.resize(m + 1, 0);
    std::uint32_t t = 1;
    for (int i = m - 1; i >= 1; --i) {
      t = mulm(t, H[i][i - 1], ell);
      if (t == 0) break;
      const std::uint32_t coeff = mulm(t, H[i - 1][m - 1], ell);
      if (coeff == 0) continue;
      kernels::axpy_mod(next.data(), p[i - 1].data(), ell - coeff, p[i - 1].size(), ell);
    }
    trim(next);
    p[m] = std::move(next);
  }
  return p[n];
}

namespace {

void split_linear(const ModPoly& g, std::uint32_t ell, std::mt19937_64& rng, std::vector<std::uint32_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(static_cast<std::uint32_t>((ell - mulm(g[0], inv(g[1], ell), ell)) % ell));
    return;
  }
  if (ell == 2) {
    // Only candidates are 0 and 1.
    for (std::uint32_t x : {0u, 1u}) {
      std::uint32_t acc = 0;
      for (std::size_t i = g.size(); i-- > 0;) acc = (acc * x + g[i]) % 2;
      if (acc == 0) out.push_back(x);
    }
    return;
  }
  std::uniform_int_distribution<std::uint32_t> dist(0, ell - 1);
  while (true) {
    const ModPoly shifted = {dist(rng), 1};
    ModPoly h = powmod(shifted, (ell - 1) / 2, g, ell);
    if (h.empty()) h = {ell - 1};
    else h[0] = (h[0] + ell - 1) % ell;
    trim(h);
    const ModPoly d = gcd(h, g, ell);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, ell, rng, out);
      split_linear(quo(g, d, ell), ell, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint32_t> roots(const ModPoly& f, std::uint32_t ell) {
  ModPoly monic = f;
  trim(monic);
  if (monic.size() <= 1) return {};
  kernels::scale_mod(monic.data(), inv(monic.back(), ell), monic.size(), ell);
  // gcd(f, x^ell - x) collects the distinct linear factors.
  ModPoly xl = powmod(ModPoly{0, 1}, ell, monic, ell);
  xl.resize(std::max<std::size_t>(xl.size(), 2), 0);
  xl[1] = (xl[1] + ell - 1) % ell;
  trim(xl);
  const ModPoly g = xl.empty() ? monic : gcd(xl, monic, ell);
  std::vector<std::uint32_t> out;
  std::mt19937_64 rng(0xc0ffee);
  split_linear(g, ell, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace regrep::modl
