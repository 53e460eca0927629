#include "regrep/parahoric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "regrep/error.hpp"
#include "regrep/group.hpp"

namespace regrep {

int Flag::n() const {
  int total = 0;
  for (int b : blocks) total += b;
  return total;
}

int Flag::rank(int i) const {
  int total = 0;
  for (int b = 0; b < e() - i; ++b) total += blocks[b];
  return total;
}

Flag Flag::parse(std::string_view text) {
  if (text.starts_with("flag:")) text.remove_prefix(5);
  Flag flag;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
    require(ec == std::errc() && ptr == text.data() + comma && value > 0, ErrorCode::ParseError,
            "flag block sizes must be positive integers");
    flag.blocks.push_back(value);
    pos = comma + 1;
  }
  require(!flag.blocks.empty(), ErrorCode::ParseError, "empty flag");
  return flag;
}

std::string Flag::to_string() const {
  std::ostringstream out;
  out << "flag:";
  for (std::size_t i = 0; i < blocks.size(); ++i) out << (i ? "," : "") << blocks[i];
  return out.str();
}

std::vector<Flag> all_flags(int n) {
  std::vector<Flag> out;
  // Compositions of n via the 2^(n-1) cut patterns.
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    Flag f;
    int current = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        f.blocks.push_back(current);
        current = 1;
      } else {
        ++current;
      }
    }
    f.blocks.push_back(current);
    out.push_back(f);
  }
  return out;
}

Parahoric::Parahoric(RingPtr ring, Flag flag) : ring_(std::move(ring)), flag_(std::move(flag)) {
  require(flag_.e() >= 1, ErrorCode::ParseError, "flag needs at least one block");
  for (int b = 0; b < flag_.e(); ++b)
    for (int k = 0; k < flag_.blocks[b]; ++k) block_.push_back(b + 1);
}

int Parahoric::required_valuation(int m, int i, int j) const {
  const int num = m + block_[i] - block_[j];
  const int e = flag_.e();
  // Ceiling division valid for negative numerators.
  int v = num >= 0 ? (num + e - 1) / e : -((-num) / e);
  return std::clamp(v, 0, ring_->r());
}

bool Parahoric::in_radical_power(int m, const Mat& x) const {
  require(m >= 0 && m <= e() * r(), ErrorCode::BadExponent, "radical exponent outside [0, er]");
  const int n = this->n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (ring_->valuation(x(i, j)) < required_valuation(m, i, j)) return false;
  return true;
}

ModuleBasis Parahoric::radical_power(int m) const {
  require(m >= 0, ErrorCode::BadExponent, "negative radical exponent");
  const int n = this->n();
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int v = required_valuation(m, i, j);
      if (v >= r()) continue;
      Vec g(n * n, 0);
      g[i * n + j] = ring_->pi_pow(v);
      gens.push_back(std::move(g));
    }
  return ModuleBasis::span(ring_, n * n, gens);
}

ModuleBasis Parahoric::radical_power_by_products(int m) const {
  if (m <= 1) return radical_power(m);
  const int n = this->n();
  const auto P = radical_power(1);
  auto acc = P;
  for (int step = 2; step <= m; ++step) {
    std::vector<Vec> gens;
    for (const auto& a : acc.rows())
      for (const auto& b : P.rows()) gens.push_back(mat_to_vec(vec_to_mat(ring_, n, a) * vec_to_mat(ring_, n, b)));
    acc = ModuleBasis::span(ring_, n * n, gens);
  }
  return acc;
}

ModuleBasis Parahoric::lattice(int k) const {
  const int n = this->n();
  if (k >= e() * r()) return ModuleBasis(ring_, n);
  const int i = k % e(), j = k / e();
  const int ni = flag_.rank(i);
  std::vector<Vec> gens;
  for (int a = 0; a < n; ++a) {
    Vec g(n, 0);
    g[a] = ring_->pi_pow(a < ni ? j : j + 1);
    gens.push_back(std::move(g));
  }
  return ModuleBasis::span(ring_, n, gens);
}

int Parahoric::log_size(int m) const { return radical_power(m).log_size(); }

std::vector<Key> Parahoric::enumerate_units(const MatCodec& codec, int m, std::uint64_t cap) const {
  const int n = this->n();
  const int lg = log_size(m);
  std::uint64_t total = 1;
  for (int i = 0; i < lg; ++i) {
    total *= ring_->q();
    require(total <= cap || m == 0, ErrorCode::CapExceeded, "U^m exceeds the enumeration cap");
  }
  // Mixed radix over entries: entry (i,j) ranges over varpi^v o.
  std::vector<std::uint64_t> radix(n * n);
  std::vector<int> vals(n * n);
  for (int k = 0; k < n * n; ++k) {
    vals[k] = required_valuation(m, k / n, k % n);
    radix[k] = 1;
    for (int t = vals[k]; t < r(); ++t) radix[k] *= ring_->q();
  }
  std::vector<Key> out;
  Mat x(ring_, n);
  std::vector<std::uint64_t> digit(n * n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (int k = 0; k < n * n; ++k) {
      Ring::Value v = ring_->shift_up(digit[k], vals[k]);
      if (m > 0 && k / n == k % n) v = ring_->add(v, 1);
      x(k / n, k % n) = v;
    }
    if (m > 0 || x.is_invertible()) {
      out.push_back(codec.encode(x));
      require(out.size() <= cap, ErrorCode::CapExceeded, "U^0 exceeds the enumeration cap");
    }
    for (int k = 0; k < n * n; ++k) {
      if (++digit[k] < radix[k]) break;
      digit[k] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string instance_name(const Parahoric& P, const std::string& extra = {}) {
  std::string s = P.ring()->spec().to_string() + " N=" + std::to_string(P.n()) + " " + P.flag().to_string();
  if (!extra.empty()) s += " " + extra;
  return s;
}

// {x in M_N : x g in target for every generator g}, where g are vectors of
// o^N (acting = false: x g as a column action) or matrices (acting = true: x g as products).
ModuleBasis solve_action(const Parahoric& P, const std::vector<std::pair<Vec, const ModuleBasis*>>& conditions, bool matrices) {
  const auto& R = P.ring();
  const int n = P.n();
  const int block = matrices ? n * n : n;
  const int total = block * static_cast<int>(conditions.size());
  std::vector<Vec> A(n * n, Vec(total, 0));
  std::vector<Vec> target;
  for (std::size_t c = 0; c < conditions.size(); ++c) {
    const auto& [g, module] = conditions[c];
    const int off = static_cast<int>(c) * block;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Vec& row = A[a * n + b];
        if (matrices) {
          // (E_ab g)_{a,t} = g_{b,t}
          for (int t = 0; t < n; ++t) row[off + a * n + t] = g[b * n + t];
        } else {
          row[off + a] = g[b];
        }
      }
    for (const auto& t : module->rows()) {
      Vec v(total, 0);
      std::copy(t.begin(), t.end(), v.begin() + off);
      target.push_back(std::move(v));
    }
  }
  return preimage(R, A, ModuleBasis::span(R, total, target));
}

ModuleBasis product_module(const Parahoric& P, const ModuleBasis& X, const ModuleBasis& L) {
  const int n = P.n();
  std::vector<Vec> gens;
  for (const auto& x : X.rows()) {
    const Mat m = vec_to_mat(P.ring(), n, x);
    for (const auto& l : L.rows()) {
      Vec out(n, 0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out[a] = P.ring()->add(out[a], P.ring()->mul(m(a, b), l[b]));
      gens.push_back(std::move(out));
    }
  }
  return ModuleBasis::span(P.ring(), n, gens);
}

// Block upper-triangular (strict when `strict`) matrices with exact zeros below.
ModuleBasis parabolic_module(const Parahoric& P, bool strict) {
  const int n = P.n();
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool ok = strict ? P.block_of(i) < P.block_of(j) : P.block_of(i) <= P.block_of(j);
      if (!ok) continue;
      Vec g(n * n, 0);
      g[i * n + j] = 1;
      gens.push_back(std::move(g));
    }
  return ModuleBasis::span(P.ring(), n * n, gens);
}

}  // namespace

void check_lattice_chain(const Parahoric& P, Ledger& ledger) {
  const int er = P.e() * P.r();
  const int n = P.n();
  bool strict = true, periodic = true, formula = true;
  std::string detail;
  for (int k = 0; k < er; ++k) {
    const auto a = P.lattice(k), b = P.lattice(k + 1);
    if (!b.is_subset_of(a) || b.log_size() >= a.log_size()) {
      strict = false;
      detail += "L_" + std::to_string(k + 1) + " not strictly inside L_" + std::to_string(k) + "; ";
    }
    if (P.lattice(k + P.e()) != a.scaled_by_pi(1)) {
      periodic = false;
      detail += "L_" + std::to_string(k + P.e()) + " != p L_" + std::to_string(k) + "; ";
    }
    // L_{i+ej} = p^j (V_i + pV).
    const int i = k % P.e(), j = k / P.e();
    std::vector<Vec> gens;
    for (int a2 = 0; a2 < P.flag().rank(i); ++a2) {
      Vec g(n, 0);
      g[a2] = 1;
      gens.push_back(g);
    }
    const auto vi = ModuleBasis::span(P.ring(), n, gens) + ModuleBasis::full(P.ring(), n).scaled_by_pi(1);
    if (vi.scaled_by_pi(j) != a) {
      formula = false;
      detail += "L_" + std::to_string(k) + " != p^j(V_i + pV); ";
    }
  }
  ledger.add("lattice-chain", instance_name(P), strict && periodic && formula, detail);
}

void check_parahoric_pi(const Parahoric& P, Ledger& ledger) {
  std::vector<std::pair<Vec, const ModuleBasis*>> stab, rad;
  std::vector<ModuleBasis> lattices;
  for (int i = 0; i <= P.e(); ++i) lattices.push_back(P.lattice(i));
  for (int i = 0; i < P.e(); ++i)
    for (const auto& g : lattices[i].rows()) {
      stab.emplace_back(g, &lattices[i]);
      rad.emplace_back(g, &lattices[i + 1]);
    }
  const auto A = P.radical_power(0), Prad = P.radical_power(1);
  const bool a_ok = solve_action(P, stab, false) == A;
  const bool p_ok = solve_action(P, rad, false) == Prad;
  const auto pE = ModuleBasis::full(P.ring(), P.n() * P.n()).scaled_by_pi(1);
  const bool a_formula = parabolic_module(P, false) + pE == A;
  const bool p_formula = parabolic_module(P, true) + pE == Prad;
  std::string detail;
  if (!a_ok) detail += "stabilizer algebra differs from block pattern; ";
  if (!p_ok) detail += "radical differs from block pattern; ";
  if (!a_formula) detail += "A != P + pE; ";
  if (!p_formula) detail += "radical != I + pE; ";
  ledger.add("parahoric-pi", instance_name(P), a_ok && p_ok && a_formula && p_formula, detail);
}

void check_radical_powers(const Parahoric& P, Ledger& ledger) {
  const int er = P.e() * P.r();
  std::string detail;
  bool ok = true;
  for (int m = 0; m <= er; ++m) {
    if (P.radical_power(m) != P.radical_power_by_products(m)) {
      ok = false;
      detail += "m=" + std::to_string(m) + " block pattern != iterated product; ";
    }
  }
  ledger.add("radical-powers", instance_name(P), ok, detail);
}

void check_shift(const Parahoric& P, Ledger& ledger) {
  const int e = P.e(), r = P.r(), er = e * r;
  bool ok1 = true, ok2 = true, ok3 = true;
  std::string detail;
  std::vector<ModuleBasis> L, Pm;
  for (int k = 0; k <= 2 * er + e; ++k) L.push_back(P.lattice(k));
  for (int m = 0; m <= 2 * er; ++m) Pm.push_back(P.radical_power(m));
  for (int m = 0; m <= e * (r - 1) + 1; ++m) {
    for (int i = 0; i <= er; ++i)
      if (product_module(P, Pm[m], L[i]) != L[i + m]) {
        ok1 = false;
        detail += "P^" + std::to_string(m) + " L_" + std::to_string(i) + " != L_" + std::to_string(i + m) + "; ";
      }
    for (int k = 0; k <= e * (r - 1) + 1 - m; ++k) {
      std::vector<std::pair<Vec, const ModuleBasis*>> cond2, cond3;
      for (int i = k; i <= k + e - 1; ++i)
        for (const auto& g : L[i].rows()) cond2.emplace_back(g, &L[i + m]);
      if (solve_action(P, cond2, false) != Pm[m]) {
        ok2 = false;
        detail += "lattice description fails m=" + std::to_string(m) + " k=" + std::to_string(k) + "; ";
      }
      for (const auto& g : Pm[k].rows()) cond3.emplace_back(g, &Pm[k + m]);
      if (solve_action(P, cond3, true) != Pm[m]) {
        ok3 = false;
        detail += "ideal quotient fails m=" + std::to_string(m) + " k=" + std::to_string(k) + "; ";
      }
    }
  }
  ledger.add("shift", instance_name(P, "(i) P^m L_i = L_{i+m}"), ok1, ok1 ? "" : detail);
  ledger.add("shift", instance_name(P, "(ii) lattice description"), ok2, ok2 ? "" : detail);
  ledger.add("shift", instance_name(P, "(iii) ideal quotient"), ok3, ok3 ? "" : detail);
}

void check_ap_formulae(const Parahoric& P, Ledger& ledger) {
  const int e = P.e(), r = P.r(), er = e * r, n = P.n();
  const auto A = P.radical_power(0);
  // pA and Ap as products with the scalar varpi.
  std::vector<Vec> left, right;
  const Mat pi = Mat::scalar(P.ring(), n, P.ring()->uniformizer());
  for (const auto& a : A.rows()) {
    const Mat m = vec_to_mat(P.ring(), n, a);
    left.push_back(mat_to_vec(pi * m));
    right.push_back(mat_to_vec(m * pi));
  }
  const auto pA = ModuleBasis::span(P.ring(), n * n, left), Ap = ModuleBasis::span(P.ring(), n * n, right);
  ledger.add("ap-formulae", instance_name(P, "(i) pA = Ap = P^e"), pA == Ap && pA == P.radical_power(e));
  bool strict_ok = true;
  std::string detail;
  for (int m = 0; m <= er + 1; ++m) {
    const bool equal = P.radical_power(m) == P.radical_power(m + 1);
    if (equal != (m >= er)) {
      strict_ok = false;
      detail += "m=" + std::to_string(m) + "; ";
    }
  }
  ledger.add("ap-formulae", instance_name(P, "(ii) P^m = P^(m+1) iff m >= er"), strict_ok, detail);
  const bool top = P.radical_power(e * (r - 1)) == parabolic_module(P, false).scaled_by_pi(r - 1) &&
                   P.radical_power(e * (r - 1) + 1) == parabolic_module(P, true).scaled_by_pi(r - 1);
  ledger.add("ap-formulae", instance_name(P, "P^(e(r-1)) = p^(r-1)P, P^(e(r-1)+1) = p^(r-1)I"), top);
}

void check_trace_duality(const Parahoric& P, Ledger& ledger) {
  const int e = P.e(), r = P.r(), n = P.n();
  const int top = e * (r - 1) + 1;
  bool ok = true;
  std::string detail;
  for (int i = 0; i <= top; ++i) {
    const auto Pi = P.radical_power(i);
    // x -> (tr(g x))_g; tr(g x) = sum_{a,b} g_ab x_ba.
    std::vector<Vec> A(n * n, Vec(Pi.rows().size(), 0));
    for (std::size_t c = 0; c < Pi.rows().size(); ++c)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) A[b * n + a][c] = Pi.rows()[c][a * n + b];
    const auto ann = kernel(P.ring(), A);
    if (ann != P.radical_power(top - i)) {
      ok = false;
      detail += "i=" + std::to_string(i) + "; ";
    }
  }
  ledger.add("trace-duality", instance_name(P), ok, detail);
}

void check_commutator_filtration(const Parahoric& P, Ledger& ledger, std::uint64_t samples, std::uint64_t exhaustive_limit) {
  const int er = P.e() * P.r();
  const MatCodec codec(P.ring(), P.n());
  std::mt19937_64 rng(17);
  bool ok = true;
  std::string detail;
  std::uint64_t checked = 0;
  for (int m = 1; m < er; ++m)
    for (int k = m; m + k <= er; ++k) {
      const std::uint64_t cap = 1u << 18;
      if (std::pow(P.ring()->q(), P.log_size(m)) > cap) continue;
      const auto Um = P.enumerate_units(codec, m, cap);
      const auto Uk = P.enumerate_units(codec, k, cap);
      auto test = [&](Key a, Key b) {
        const Mat c = codec.decode(codec.commutator(a, b)) - Mat::identity(P.ring(), P.n());
        ++checked;
        if (!P.in_radical_power(std::min(m + k, er), c)) {
          ok = false;
          detail = "m=" + std::to_string(m) + " n=" + std::to_string(k) + " x=" + codec.decode(a).to_string() +
                   " y=" + codec.decode(b).to_string();
        }
      };
      if (Um.size() * Uk.size() <= exhaustive_limit) {
        for (Key a : Um)
          for (Key b : Uk) test(a, b);
      } else {
        std::uniform_int_distribution<std::size_t> da(0, Um.size() - 1), db(0, Uk.size() - 1);
        for (std::uint64_t s = 0; s < samples; ++s) test(Um[da(rng)], Uk[db(rng)]);
      }
    }
  ledger.add("commutator-filtration", instance_name(P), ok, ok ? std::to_string(checked) + " pairs" : detail);
}

void check_abelian_filtration(const Parahoric& P, Ledger& ledger, std::uint64_t cap) {
  const int er = P.e() * P.r();
  const int half = (er + 1) / 2;
  const auto codec = std::make_shared<const MatCodec>(P.ring(), P.n());
  bool ok = true;
  std::string detail;
  for (int m = half; m <= er; ++m) {
    // Products of generators of P^m vanish, so 1 + P^m is abelian; confirm on the group itself.
    std::vector<Key> gens;
    const auto Pm = P.radical_power(m);
    for (const auto& g : Pm.rows())
      gens.push_back(codec->encode(vec_to_mat(P.ring(), P.n(), g) + Mat::identity(P.ring(), P.n())));
    bool abelian = true;
    for (Key a : gens)
      for (Key b : gens) abelian &= codec->mul(a, b) == codec->mul(b, a);
    if (abelian && P.log_size(m) <= 16 && std::pow(P.ring()->q(), P.log_size(m)) <= cap) {
      const auto U = Group::from_elements(codec, P.enumerate_units(*codec, m, cap));
      abelian = U->is_abelian() && static_cast<int>(U->order()) == static_cast<int>(std::pow(P.ring()->q(), P.log_size(m)));
    }
    if (!abelian) {
      ok = false;
      detail += "U^" + std::to_string(m) + " not abelian; ";
    }
  }
  ledger.add("abelian-filtration", instance_name(P, "m >= " + std::to_string(half)), ok, detail);
}

}  // namespace regrep
