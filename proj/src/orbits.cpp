#include "regrep/orbits.hpp"

#include <sstream>

#include "regrep/error.hpp"

namespace regrep {

int Partition::n() const {
  int total = 0;
  for (const auto& p : parts) total += p.d * p.m;
  return total;
}

int Partition::e() const {
  int total = 0;
  for (const auto& p : parts) total += p.m;
  return total;
}

Flag Partition::flag() const {
  Flag f;
  for (const auto& p : parts)
    for (int k = 0; k < p.m; ++k) f.blocks.push_back(p.d);
  return f;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out << (i ? "," : "") << parts[i].d;
    if (parts[i].m > 1) out << "^" << parts[i].m;
  }
  out << ")";
  return out.str();
}

Partition partition_of(const RingPtr& residue_ring, const Poly& char_poly) {
  require(residue_ring->r() == 1, ErrorCode::BadLevel, "partition_of needs the residue field");
  Partition lambda;
  for (auto& [f, m] : poly::factor(*residue_ring, char_poly)) lambda.parts.push_back({f, poly::degree(f), m});
  return lambda;
}

Amin amin_from_residue(const Mat& beta_bar, const RingPtr& target) {
  auto lambda = partition_of(beta_bar.ring(), beta_bar.char_poly());
  Parahoric P(target, lambda.flag());
  return {std::move(lambda), std::move(P)};
}

std::string OrbitRep::key() const { return poly::format(char_poly); }

OrbitRep orbit_from_matrix(const Mat& x) {
  OrbitRep o{x.ring()->r(), x, is_regular(x), x.char_poly()};
  return o;
}

std::vector<OrbitRep> regular_class_list(const RingPtr& ring, int n) {
  std::vector<OrbitRep> out;
  for (const auto& f : poly::all_monic(*ring, n)) out.push_back({ring->r(), Mat::companion(ring, f), true, f});
  return out;
}

OrbitRep parse_orbit(std::string_view text, const RingPtr& full_ring, int n, int default_level) {
  if (text.starts_with("orbit:")) text.remove_prefix(6);
  std::string charpoly;
  int level = default_level;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    require(eq != std::string_view::npos, ErrorCode::ParseError, "orbit spec items must be key=value");
    const auto k = item.substr(0, eq);
    const auto v = std::string(item.substr(eq + 1));
    if (k == "charpoly") {
      charpoly = v;
    } else if (k == "level") {
      try {
        std::size_t used = 0;
        level = std::stoi(v, &used);
        require(used == v.size(), ErrorCode::ParseError, "bad orbit level");
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "bad orbit level '" + v + "'");
      }
    } else {
      throw Error(ErrorCode::ParseError, "unknown orbit key '" + std::string(k) + "'");
    }
    pos = comma + 1;
  }
  require(!charpoly.empty(), ErrorCode::ParseError, "orbit spec needs charpoly=");
  require(level >= 1 && level <= full_ring->r(), ErrorCode::BadLevel, "orbit level outside [1, r]");
  const auto ring = full_ring->truncated(level);
  const Poly f = poly::parse(*ring, charpoly);
  require(poly::is_monic(f) && poly::degree(f) == n, ErrorCode::ParseError, "orbit char poly must be monic of degree N");
  return {level, Mat::companion(ring, f), true, f};
}

namespace {

// Columns f^j x^k (j = m-1 down to 0, k = 0..d-1) in the basis 1, x, ..., x^{dm-1}.
Mat primary_basis(const RingPtr& F, const Poly& f, int m) {
  const int d = poly::degree(f);
  const int n = d * m;
  Mat S(F, n);
  int col = 0;
  for (int j = m - 1; j >= 0; --j) {
    Poly fj{1};
    for (int t = 0; t < j; ++t) fj = poly::mul(*F, fj, f);
    for (int k = 0; k < d; ++k, ++col) {
      Poly v = fj;
      v.insert(v.begin(), k, 0);
      for (int i = 0; i < static_cast<int>(v.size()); ++i) S(i, col) = v[i];
    }
  }
  return S;
}

}  // namespace

BlockForm choose_beta(const OrbitRep& orbit, const RingPtr& target) {
  require(orbit.regular && is_regular(orbit.rep), ErrorCode::NotRegular, "choose_beta needs a regular orbit");
  require(target->r() >= orbit.level, ErrorCode::BadLevel, "target ring below the orbit level");
  const auto F = target->truncated(1);
  const Poly chi = orbit.char_poly;  // canonical indices lift directly to o_r
  const Poly chi_bar = poly::reduce(*target, chi, 1);
  const int n = poly::degree(chi);
  BlockForm form{Mat(target, n), partition_of(F, chi_bar), {}};
  std::vector<Poly> primaries;
  for (const auto& part : form.lambda.parts) {
    Poly g{1};
    for (int k = 0; k < part.m; ++k) g = poly::mul(*F, g, part.f);
    primaries.push_back(g);
  }
  const auto lifted = poly::hensel_lift(*target, chi, primaries);
  int offset = 0;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const auto& part = form.lambda.parts[i];
    const Mat S = primary_basis(F, part.f, part.m).lift_to(target);
    const Mat block = S.inverse() * Mat::companion(target, lifted[i]) * S;
    const int size = part.d * part.m;
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) form.beta(offset + a, offset + b) = block(a, b);
    offset += size;
    for (int k = 0; k < part.m; ++k) form.residue_blocks.push_back(Mat::companion(F, part.f));
  }
  return form;
}

std::string orbit_key(const Mat& beta, int level) {
  require(is_regular(beta), ErrorCode::NotRegular, "orbit keys are defined for regular elements only");
  require(level >= 1 && level <= beta.ring()->r(), ErrorCode::BadLevel, "orbit key level outside [1, r]");
  return poly::format(beta.reduce(level).char_poly());
}

int residue_centralizer_log(const BlockForm& form) {
  // Centralizer of a block-diagonal element inside the block-diagonal algebra:
  // X -> X b - b X solved over F_q, block by block.
  int log = 0;
  for (const auto& b : form.residue_blocks) log += centralizer_module(b, 1).log_size();
  return log;
}

}  // namespace regrep
