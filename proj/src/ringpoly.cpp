#include "regrep/ringpoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>
#include <sstream>

#include "regrep/error.hpp"

namespace regrep::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

bool is_monic(const Poly& f) { return !f.empty() && f.back() == 1; }

Poly add(const Ring& R, const Poly& f, const Poly& g) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = R.add(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
  trim(out);
  return out;
}

Poly sub(const Ring& R, const Poly& f, const Poly& g) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = R.sub(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
  trim(out);
  return out;
}

Poly mul(const Ring& R, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = R.add(out[i + j], R.mul(f[i], g[j]));
  }
  trim(out);
  return out;
}

Poly scale(const Ring& R, const Poly& f, Ring::Value c) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = R.mul(f[i], c);
  trim(out);
  return out;
}

Poly shift_up(const Ring& R, const Poly& f, int k) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = R.shift_up(f[i], k);
  trim(out);
  return out;
}

Poly derivative(const Ring& R, const Poly& f) {
  if (f.size() <= 1) return {};
  Poly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = R.mul(f[i], R.from_int(static_cast<std::int64_t>(i)));
  trim(out);
  return out;
}

Ring::Value eval(const Ring& R, const Poly& f, Ring::Value x) {
  Ring::Value acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = R.add(R.mul(acc, x), f[i]);
  return acc;
}

std::pair<Poly, Poly> divrem(const Ring& R, const Poly& f, const Poly& g) {
  require(!g.empty() && R.is_unit(g.back()), ErrorCode::NotAUnit, "divisor needs a unit leading coefficient");
  Poly r = f;
  trim(r);
  if (r.size() < g.size()) return {{}, r};
  const Ring::Value lead_inv = R.inv(g.back());
  Poly q(r.size() - g.size() + 1, 0);
  for (std::size_t i = r.size(); i-- >= g.size();) {
    const Ring::Value c = R.mul(r[i], lead_inv);
    q[i - g.size() + 1] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      auto& slot = r[i - g.size() + 1 + j];
      slot = R.sub(slot, R.mul(c, g[j]));
    }
    if (i == g.size() - 1) break;
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly rem(const Ring& R, const Poly& f, const Poly& g) { return divrem(R, f, g).second; }

Poly reduce(const Ring& R, const Poly& f, int level) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = R.reduce(f[i], level);
  trim(out);
  return out;
}

Poly make_monic(const Ring& F, const Poly& f) {
  if (f.empty()) return f;
  return scale(F, f, F.inv(f.back()));
}

Poly gcd(const Ring& F, Poly f, Poly g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = rem(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(F, f);
}

Poly xgcd(const Ring& F, const Poly& f, const Poly& g, Poly& s, Poly& t) {
  Poly r0 = f, r1 = g, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divrem(F, r0, r1);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    Poly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = std::move(s0);
    t = std::move(t0);
    return r0;
  }
  const Ring::Value c = F.inv(r0.back());
  s = scale(F, s0, c);
  t = scale(F, t0, c);
  return scale(F, r0, c);
}

Poly powmod(const Ring& F, const Poly& base, std::uint64_t e, const Poly& modulus) {
  Poly result = rem(F, Poly{1}, modulus);
  Poly b = rem(F, base, modulus);
  while (e > 0) {
    if (e & 1) result = rem(F, mul(F, result, b), modulus);
    b = rem(F, mul(F, b, b), modulus);
    e >>= 1;
  }
  return result;
}

namespace {

void require_field(const Ring& F) { require(F.r() == 1, ErrorCode::BadLevel, "field operation needs r = 1"); }

// f = g(x)^p for f' = 0; returns g.
Poly pth_root(const Ring& F, const Poly& f) {
  const std::uint64_t p = F.p();
  const std::uint64_t root_exp = F.q() / p;  // a^(q/p) is the p-th root in F_q
  Poly out(f.size() / p + 1, 0);
  for (std::size_t i = 0; i < f.size(); i += p) out[i / p] = F.pow(f[i], root_exp);
  trim(out);
  return out;
}

std::vector<std::pair<Poly, int>> squarefree(const Ring& F, const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  if (degree(f) <= 0) return out;
  const Poly df = derivative(F, f);
  if (df.empty()) {
    for (auto& [g, m] : squarefree(F, pth_root(F, f))) out.emplace_back(g, m * static_cast<int>(F.p()));
    return out;
  }
  Poly c = gcd(F, f, df);
  Poly w = divrem(F, f, c).first;
  int i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(F, w, c);
    Poly z = divrem(F, w, y).first;
    if (degree(z) > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = divrem(F, c, y).first;
  }
  if (degree(c) > 0)
    for (auto& [g, m] : squarefree(F, pth_root(F, c))) out.emplace_back(g, m * static_cast<int>(F.p()));
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Ring& F, Poly f) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x = {0, 1};
  Poly h = rem(F, x, f);
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = powmod(F, h, F.q(), f);
    Poly g = gcd(F, sub(F, h, x), f);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divrem(F, f, g).first;
      h = rem(F, h, f);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, degree(f));
  return out;
}

void equal_degree(const Ring& F, const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(g) == d) {
    out.push_back(make_monic(F, g));
    return;
  }
  const std::uint64_t q = F.q();
  std::uniform_int_distribution<std::uint64_t> coeff(0, q - 1);
  while (true) {
    Poly a(degree(g));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) <= 0) continue;
    Poly b;
    if (q % 2 == 1) {
      // a^((q^d - 1) / 2) - 1
      std::uint64_t qd = 1;
      for (int i = 0; i < d; ++i) qd *= q;
      b = sub(F, powmod(F, a, (qd - 1) / 2, g), Poly{1});
    } else {
      // Absolute trace to F_2: sum of a^(2^i) for i < f d.
      Poly term = rem(F, a, g);
      b = term;
      for (int i = 1; i < F.f() * d; ++i) {
        term = rem(F, mul(F, term, term), g);
        b = add(F, b, term);
      }
    }
    Poly c = gcd(F, b, g);
    if (degree(c) > 0 && degree(c) < degree(g)) {
      equal_degree(F, c, d, rng, out);
      equal_degree(F, divrem(F, g, c).first, d, rng, out);
      return;
    }
  }
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Ring& F, const Poly& f) {
  require_field(F);
  require(is_monic(f), ErrorCode::ParseError, "factor expects a monic polynomial");
  std::mt19937_64 rng(0x5eed);
  std::vector<std::pair<Poly, int>> out;
  for (auto& [part, mult] : squarefree(F, f)) {
    for (auto& [block, d] : distinct_degree(F, part)) {
      std::vector<Poly> pieces;
      equal_degree(F, block, d, rng, pieces);
      for (auto& piece : pieces) out.emplace_back(piece, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const Ring& F, const Poly& f) {
  if (degree(f) <= 0) return false;
  const auto parts = factor(F, make_monic(F, f));
  return parts.size() == 1 && parts[0].second == 1;
}

std::vector<Poly> all_monic(const Ring& R, int deg) {
  std::uint64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= R.size();
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(deg + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < deg; ++i) {
      f[i] = c % R.size();
      c /= R.size();
    }
    f[deg] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

Poly truncate_coeffs(const Ring& R, const Poly& f, int precision) {
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = R.mod_pi_pow(f[i], precision);
  trim(out);
  return out;
}

// One factor split F = g h over o_r from g0 h0 = F mod varpi.
std::pair<Poly, Poly> hensel_two(const Ring& R, const Poly& F, Poly g, Poly h, Poly s, Poly t) {
  for (int k = 1; k < R.r(); k *= 2) {
    const int precision = std::min(2 * k, R.r());
    const Poly e = sub(R, F, mul(R, g, h));
    auto [qq, rr] = divrem(R, mul(R, s, e), h);
    Poly g2 = truncate_coeffs(R, add(R, g, add(R, mul(R, t, e), mul(R, qq, g))), precision);
    Poly h2 = truncate_coeffs(R, add(R, h, rr), precision);
    const Poly b = sub(R, add(R, mul(R, s, g2), mul(R, t, h2)), Poly{1});
    auto [cc, dd] = divrem(R, mul(R, s, b), h2);
    Poly s2 = truncate_coeffs(R, sub(R, s, dd), precision);
    Poly t2 = truncate_coeffs(R, sub(R, t, add(R, mul(R, t, b), mul(R, cc, g2))), precision);
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
  }
  return {g, h};
}

}  // namespace

std::vector<Poly> hensel_lift(const Ring& R, const Poly& F, const std::vector<Poly>& residue_factors) {
  require(is_monic(F), ErrorCode::ParseError, "Hensel lifting needs a monic polynomial");
  const auto field = R.truncated(1);
  Poly product = {1};
  for (const auto& u : residue_factors) {
    require(is_monic(u), ErrorCode::ParseError, "residue factors must be monic");
    product = mul(*field, product, u);
  }
  require(product == reduce(R, F, 1), ErrorCode::CheckFailed, "residue factors do not multiply to F mod varpi");
  std::vector<Poly> out;
  Poly rest = F;
  for (std::size_t i = 0; i + 1 < residue_factors.size(); ++i) {
    Poly tail = {1};
    for (std::size_t j = i + 1; j < residue_factors.size(); ++j) tail = mul(*field, tail, residue_factors[j]);
    Poly s, t;
    const Poly d = xgcd(*field, residue_factors[i], tail, s, t);
    require(d == Poly{1}, ErrorCode::CheckFailed, "residue factors are not coprime");
    // Residue-field elements are valid o_r indices (digit 0 only).
    auto [g, h] = hensel_two(R, rest, residue_factors[i], tail, s, t);
    require(mul(R, g, h) == rest, ErrorCode::CheckFailed, "Hensel lifting failed");
    out.push_back(std::move(g));
    rest = std::move(h);
  }
  out.push_back(std::move(rest));
  return out;
}

Poly parse(const Ring& R, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  require(!s.empty(), ErrorCode::ParseError, "empty polynomial");
  Poly out;
  std::size_t pos = 0;
  auto read_int = [&](std::uint64_t& value) {
    const auto start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, value);
    require(ec == std::errc(), ErrorCode::ParseError, "bad coefficient in '" + s + "'");
    return true;
  };
  while (pos < s.size()) {
    bool negate = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negate = s[pos] == '-';
      ++pos;
    } else {
      require(pos == 0, ErrorCode::ParseError, "expected '+' or '-' in '" + s + "'");
    }
    std::uint64_t coeff = 1, exponent = 0;
    const bool has_coeff = read_int(coeff);
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        require(read_int(exponent), ErrorCode::ParseError, "bad exponent in '" + s + "'");
      }
    } else {
      require(has_coeff, ErrorCode::ParseError, "bad term in '" + s + "'");
    }
    require(coeff < R.size(), ErrorCode::ParseError, "coefficient outside the ring in '" + s + "'");
    require(exponent < 64, ErrorCode::ParseError, "exponent too large");
    if (out.size() <= exponent) out.resize(exponent + 1, 0);
    out[exponent] = R.add(out[exponent], negate ? R.neg(coeff) : coeff);
  }
  trim(out);
  return out;
}

std::string format(const Poly& f, char var) {
  if (f.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0 || f[i] != 1) out << f[i];
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

}  // namespace regrep::poly
