#include "regrep/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "regrep/error.hpp"
#include "regrep/modular.hpp"
#include "regrep/ringpoly.hpp"

namespace regrep {

namespace {

const char* kNonRegular = "non-regular";

// All of GL_n(o_r) by filtering M_n(o_r); deliberately not generator-based.
GroupPtr enumerate_gl(const RingPtr& ring, int n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= ring->size();
    require(total <= cap * 64, ErrorCode::CapExceeded, "M_N(o_r) too large to enumerate");
  }
  auto codec = std::make_shared<const MatCodec>(ring, n);
  std::vector<Key> keys;
  std::vector<Ring::Value> entries(n * n, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (auto& e : entries) {
      e = x % ring->size();
      x /= ring->size();
    }
    const Mat m(ring, n, entries);
    if (!m.is_invertible()) continue;
    keys.push_back(codec->encode(m));
    require(keys.size() <= cap, ErrorCode::CapExceeded, "|G_r| exceeds the enumeration cap");
  }
  std::sort(keys.begin(), keys.end());
  return Group::from_elements(codec, std::move(keys));
}

GroupPtr congruence_kernel(const GroupPtr& G, int i) {
  const auto& codec = *G->codec();
  const auto& ring = *codec.ring();
  const int n = codec.n();
  return subgroup_where(G, [&](Key g) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (ring.mod_pi_pow(ring.sub(codec.entry(g, a, b), a == b ? 1 : 0), i) != 0) return false;
    return true;
  });
}

struct Classifier {
  const IrrepCensus& census;
  std::vector<Mat> bs;             // every b in M_N(o_{l'}), lifted digitwise to o_r
  std::vector<std::string> keys;   // orbit key per b
  std::vector<std::uint32_t> k_class;
  std::vector<std::vector<std::uint64_t>> psi_exp;  // per b, per element of K^l, exponent mod exp G

  explicit Classifier(const IrrepCensus& c) : census(c) {
    const auto& ring = c.G->codec()->ring();
    const auto low = ring->truncated(c.lp);
    const int n = c.n;
    const std::uint64_t M = ring->psi_order();
    // psi_b is a character of K^l, so its values have order dividing exp G.
    const std::uint64_t g = std::gcd(M, c.table.exponent);
    std::uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= low->size();
    const auto& Kl = *c.K[c.l];
    const auto& codec = *c.G->codec();
    for (Key k : Kl.elements()) k_class.push_back(c.G->class_of_key(k));
    std::vector<Ring::Value> entries(n * n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t x = idx;
      for (auto& e : entries) {
        e = x % low->size();
        x /= low->size();
      }
      const Mat b_low(low, n, entries);
      keys.push_back(is_regular(b_low) ? poly::format(b_low.char_poly()) : kNonRegular);
      const Mat b(ring, n, entries);
      std::vector<std::uint64_t> exps;
      for (Key k : Kl.elements()) {
        Mat y = codec.decode(k);
        for (int a = 0; a < n; ++a) y(a, a) = ring->sub(y(a, a), 1);
        const auto e = ring->psi_exponent((b * y).trace(), M);
        require(e % (M / g) == 0, ErrorCode::CheckFailed, "psi_b value outside Q(zeta_exp)");
        exps.push_back(e / (M / g) * (c.table.exponent / g));
      }
      bs.push_back(b);
      psi_exp.push_back(std::move(exps));
    }
  }

  // <Res_{K^l} chi, psi_b> for every b, computed in F_ell.
  std::vector<std::uint64_t> multiplicities(std::size_t irrep) const {
    const auto& t = census.table;
    const std::uint64_t ell = t.ell;
    const std::uint64_t order = census.K[census.l]->order();
    const std::uint64_t inv_order = invmod(order % ell, ell);
    std::vector<std::uint64_t> out;
    for (const auto& exps : psi_exp) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < exps.size(); ++i) {
        const std::uint64_t conj = (t.exponent - exps[i] % t.exponent) % t.exponent;
        acc = (acc + mulmod(t.values_mod[irrep][k_class[i]], powmod(t.root, conj, ell), ell)) % ell;
      }
      out.push_back(mulmod(acc, inv_order, ell));
    }
    return out;
  }
};

}  // namespace

IrrepCensus full_census(const RingSpec& spec, int n, std::uint64_t cap) {
  const auto ring = Ring::make(spec);
  require(n >= 1 && n <= MatCodec::kMaxN, ErrorCode::BadDegree, "N must be between 1 and 4");
  IrrepCensus c;
  c.spec = spec;
  c.n = n;
  c.r = ring->r();
  c.l = (c.r + 1) / 2;
  c.lp = c.r / 2;
  c.G = enumerate_gl(ring, n, cap);
  for (int i = 0; i <= c.r; ++i) c.K.push_back(congruence_kernel(c.G, i));
  TableOptions options;
  options.cap = cap;
  c.table = character_table(c.G, options);
  const Classifier cl(c);
  for (std::size_t a = 0; a < c.table.size(); ++a) {
    IrrepInfo info;
    info.degree = c.table.irreducibles[a].degree();
    const auto mult = cl.multiplicities(a);
    std::set<std::string> keys;
    std::set<std::uint64_t> values;
    for (std::size_t b = 0; b < mult.size(); ++b) {
      if (mult[b] == 0) continue;
      keys.insert(cl.keys[b]);
      values.insert(mult[b]);
      ++info.orbit_size;
    }
    info.clifford_ok = keys.size() == 1 && values.size() == 1 &&
                       static_cast<std::int64_t>(*values.begin() * info.orbit_size) == info.degree;
    if (!keys.empty()) info.key = *keys.begin();
    if (!values.empty()) info.multiplicity = *values.begin();
    info.regular = info.key != kNonRegular;
    c.info.push_back(std::move(info));
  }
  return c;
}

bool census_consistent(const IrrepCensus& census, std::string* detail) {
  std::uint64_t sum = 0;
  bool ok = true;
  std::string why;
  for (std::size_t a = 0; a < census.info.size(); ++a) {
    const auto d = static_cast<std::uint64_t>(census.info[a].degree);
    sum += d * d;
    if (d == 0 || census.G->order() % d != 0) {
      ok = false;
      why += "degree " + std::to_string(d) + " does not divide |G|; ";
    }
    if (!census.info[a].clifford_ok) {
      ok = false;
      why += "irreducible " + std::to_string(a) + " is not Clifford-consistent; ";
    }
  }
  if (sum != census.G->order()) {
    ok = false;
    why += "sum of squared degrees " + std::to_string(sum) + " != |G|; ";
  }
  if (detail) *detail = why;
  return ok;
}

std::vector<CyclotomicValue> values_on_census(const IrrepCensus& census, const ClassFunction& chi) {
  std::vector<CyclotomicValue> out;
  for (Key rep : census.G->classes().reps) out.push_back(chi.at(rep));
  return out;
}

bool Verdict::regular_match() const {
  if (!missing_orbits.empty() || orbits.empty()) return false;
  return std::all_of(orbits.begin(), orbits.end(), [](const OrbitVerdict& v) { return v.ok(); });
}

Verdict compare(const IrrepCensus& census, const std::vector<RepReport>& reports) {
  Verdict verdict;
  std::map<std::string, std::vector<std::size_t>> by_key;
  for (std::size_t a = 0; a < census.info.size(); ++a)
    if (census.info[a].regular) by_key[census.info[a].key].push_back(a);
  std::set<std::string> seen;
  for (const auto& report : reports) {
    OrbitVerdict v;
    v.key = report.orbit_key;
    seen.insert(v.key);
    const auto it = by_key.find(v.key);
    const std::vector<std::size_t> expected = it == by_key.end() ? std::vector<std::size_t>{} : it->second;
    v.constructed = report.reps.size();
    v.expected = expected.size();
    std::vector<std::int64_t> got_deg, want_deg;
    for (const auto& rep : report.reps) got_deg.push_back(rep.degree);
    for (auto a : expected) want_deg.push_back(census.info[a].degree);
    std::sort(got_deg.begin(), got_deg.end());
    std::sort(want_deg.begin(), want_deg.end());
    v.degrees_match = got_deg == want_deg;
    // Each constructed character must be an oracle irreducible of this orbit, hit at most once.
    std::vector<std::vector<CyclotomicValue>> want;
    for (auto a : expected) want.push_back(census.table.irreducibles[a].values());
    std::vector<bool> used(want.size(), false);
    v.characters_match = v.constructed == v.expected;
    v.injective = true;
    for (const auto& rep : report.reps) {
      const auto vals = values_on_census(census, rep.character);
      bool hit = false;
      for (std::size_t i = 0; i < want.size() && !hit; ++i) {
        if (want[i] != vals) continue;
        hit = true;
        if (used[i]) v.injective = false;
        used[i] = true;
      }
      v.characters_match &= hit;
    }
    v.characters_match &= std::all_of(used.begin(), used.end(), [](bool b) { return b; });
    verdict.orbits.push_back(std::move(v));
  }
  for (const auto& [key, list] : by_key)
    if (!seen.count(key)) verdict.missing_orbits.push_back(key);
  verdict.nonregular = nonregular_kernels(census);
  return verdict;
}

NonRegularVerdict nonregular_kernels(const IrrepCensus& census) {
  NonRegularVerdict v;
  const auto& cls = census.G->classes();
  std::vector<std::size_t> last;  // classes inside K^{r-1}
  for (std::size_t c = 0; c < cls.reps.size(); ++c)
    if (census.K[census.r - 1]->contains(cls.reps[c])) last.push_back(c);
  std::vector<std::size_t> linear;
  for (std::size_t a = 0; a < census.info.size(); ++a)
    if (census.info[a].degree == 1) linear.push_back(a);
  const auto trivial_on_last = [&](const ClassFunction& chi) {
    const CyclotomicValue d(chi.degree());
    for (auto c : last)
      if (!(chi.at_class(c) == d)) return false;
    return true;
  };
  for (std::size_t a = 0; a < census.info.size(); ++a) {
    if (census.info[a].regular) continue;
    ++v.count;
    const auto& chi = census.table.irreducibles[a];
    if (trivial_on_last(chi)) {
      ++v.trivial_on_last;
      ++v.after_twist;
      continue;
    }
    for (auto b : linear)
      if (trivial_on_last(chi * census.table.irreducibles[b])) {
        ++v.after_twist;
        break;
      }
  }
  return v;
}

}  // namespace regrep
