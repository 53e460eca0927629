#include "regrep/mat.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "regrep/error.hpp"

namespace regrep {

Mat::Mat(RingPtr ring, int n) : ring_(std::move(ring)), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
  require(n >= 1, ErrorCode::ShapeMismatch, "matrix size must be >= 1");
}

Mat::Mat(RingPtr ring, int n, std::vector<Ring::Value> entries) : ring_(std::move(ring)), n_(n), a_(std::move(entries)) {
  require(n >= 1 && a_.size() == static_cast<std::size_t>(n) * n, ErrorCode::ShapeMismatch, "entry count does not match N^2");
  for (auto v : a_) require(v < ring_->size(), ErrorCode::SpecMismatch, "matrix entry outside the ring");
}

Mat Mat::identity(RingPtr ring, int n) { return scalar(std::move(ring), n, 1); }

Mat Mat::scalar(RingPtr ring, int n, Ring::Value c) {
  Mat m(std::move(ring), n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Mat Mat::diagonal(RingPtr ring, const std::vector<Ring::Value>& diag) {
  Mat m(std::move(ring), static_cast<int>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = diag[i];
  return m;
}

Mat Mat::companion(RingPtr ring, const Poly& f) {
  require(poly::is_monic(f) && poly::degree(f) >= 1, ErrorCode::ParseError, "companion needs a monic polynomial of degree >= 1");
  const int n = poly::degree(f);
  Mat m(ring, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) m(i, n - 1) = ring->neg(f[i]);
  return m;
}

Mat Mat::parse(RingPtr ring, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  require(s.size() >= 2 && s.front() == '[' && s.back() == ']', ErrorCode::ParseError, "matrix literal must look like [a,b;c,d]");
  std::vector<std::vector<Ring::Value>> rows(1);
  std::size_t pos = 1;
  while (pos < s.size() - 1) {
    bool negate = false;
    if (s[pos] == '-') {
      negate = true;
      ++pos;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size() - 1, value);
    require(ec == std::errc(), ErrorCode::ParseError, "bad matrix entry in '" + s + "'");
    require(value < ring->size(), ErrorCode::ParseError, "matrix entry outside the ring in '" + s + "'");
    rows.back().push_back(negate ? ring->neg(value) : value);
    pos = ptr - s.data();
    if (pos < s.size() - 1) {
      if (s[pos] == ';') rows.emplace_back();
      else require(s[pos] == ',', ErrorCode::ParseError, "expected ',' or ';' in '" + s + "'");
      ++pos;
    }
  }
  const int n = static_cast<int>(rows.size());
  std::vector<Ring::Value> entries;
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == n, ErrorCode::ParseError, "matrix literal is not square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Mat(std::move(ring), n, std::move(entries));
}

void Mat::check_shape(const Mat& other) const {
  require(n_ == other.n_, ErrorCode::ShapeMismatch, "matrix sizes differ");
  require(ring_->spec() == other.ring_->spec(), ErrorCode::SpecMismatch, "matrices over different rings");
}

Mat Mat::operator+(const Mat& other) const {
  check_shape(other);
  Mat out(ring_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_->add(a_[i], other.a_[i]);
  return out;
}

Mat Mat::operator-(const Mat& other) const {
  check_shape(other);
  Mat out(ring_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_->sub(a_[i], other.a_[i]);
  return out;
}

Mat Mat::operator*(const Mat& other) const {
  check_shape(other);
  const Ring& R = *ring_;
  Mat out(ring_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const auto aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j) out(i, j) = R.add(out(i, j), R.mul(aik, other(k, j)));
    }
  return out;
}

Mat Mat::scaled(Ring::Value c) const {
  Mat out(ring_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_->mul(a_[i], c);
  return out;
}

Mat Mat::shifted_up(int k) const {
  Mat out(ring_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_->shift_up(a_[i], k);
  return out;
}

Mat Mat::transpose() const {
  Mat out(ring_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Mat::operator==(const Mat& other) const {
  return n_ == other.n_ && ring_->spec() == other.ring_->spec() && a_ == other.a_;
}

Ring::Value Mat::trace() const {
  Ring::Value t = 0;
  for (int i = 0; i < n_; ++i) t = ring_->add(t, (*this)(i, i));
  return t;
}

Poly Mat::char_poly() const {
  const Ring& R = *ring_;
  // Berkowitz: vect holds coefficients from the leading one downwards.
  std::vector<Ring::Value> vect = {1, R.neg((*this)(0, 0))};
  for (int k = 1; k < n_; ++k) {
    // Column of the Toeplitz matrix: 1, -a_kk, -R S, -R M S, ..., -R M^(k-1) S.
    std::vector<Ring::Value> col(k + 2, 0);
    col[0] = 1;
    col[1] = R.neg((*this)(k, k));
    std::vector<Ring::Value> v(k);  // M^j S
    for (int i = 0; i < k; ++i) v[i] = (*this)(i, k);
    for (int j = 0; j < k; ++j) {
      Ring::Value dot = 0;
      for (int i = 0; i < k; ++i) dot = R.add(dot, R.mul((*this)(k, i), v[i]));
      col[j + 2] = R.neg(dot);
      std::vector<Ring::Value> next(k, 0);
      for (int i = 0; i < k; ++i)
        for (int t = 0; t < k; ++t) next[i] = R.add(next[i], R.mul((*this)(i, t), v[t]));
      v = std::move(next);
    }
    std::vector<Ring::Value> out(k + 2, 0);
    for (int i = 0; i < k + 2; ++i)
      for (int j = 0; j <= i && j < static_cast<int>(vect.size()); ++j) out[i] = R.add(out[i], R.mul(col[i - j], vect[j]));
    vect = std::move(out);
  }
  Poly f(vect.rbegin(), vect.rend());
  return f;
}

Ring::Value Mat::det() const {
  const Poly f = char_poly();
  const Ring::Value c0 = f.empty() ? 0 : f[0];
  return n_ % 2 == 0 ? c0 : ring_->neg(c0);
}

bool Mat::is_invertible() const { return ring_->is_unit(det()); }

Mat Mat::inverse() const {
  const Ring& R = *ring_;
  Mat a = *this, inv = identity(ring_, n_);
  for (int c = 0; c < n_; ++c) {
    int pivot = -1;
    for (int i = c; i < n_; ++i)
      if (R.is_unit(a(i, c))) {
        pivot = i;
        break;
      }
    require(pivot >= 0, ErrorCode::NotAUnit, "matrix is not invertible");
    if (pivot != c)
      for (int j = 0; j < n_; ++j) {
        std::swap(a(c, j), a(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    const auto s = R.inv(a(c, c));
    for (int j = 0; j < n_; ++j) {
      a(c, j) = R.mul(a(c, j), s);
      inv(c, j) = R.mul(inv(c, j), s);
    }
    for (int i = 0; i < n_; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const auto factor = a(i, c);
      for (int j = 0; j < n_; ++j) {
        a(i, j) = R.sub(a(i, j), R.mul(factor, a(c, j)));
        inv(i, j) = R.sub(inv(i, j), R.mul(factor, inv(c, j)));
      }
    }
  }
  return inv;
}

int Mat::valuation() const {
  int v = ring_->r();
  for (auto x : a_) v = std::min(v, ring_->valuation(x));
  return v;
}

Mat Mat::reduce(int level) const {
  auto lower = ring_->truncated(level);
  std::vector<Ring::Value> e(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) e[i] = ring_->reduce(a_[i], level);
  return Mat(lower, n_, std::move(e));
}

Mat Mat::lift_to(RingPtr ring) const {
  require(ring->family() == ring_->family() && ring->p() == ring_->p() && ring->f() == ring_->f() && ring->r() >= ring_->r(),
          ErrorCode::SpecMismatch, "lift target must extend the matrix ring");
  return Mat(std::move(ring), n_, a_);
}

Mat Mat::pow(std::uint64_t e) const {
  Mat result = identity(ring_, n_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Mat Mat::apply_poly(const Poly& f) const {
  Mat acc(ring_, n_);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * (*this) + scalar(ring_, n_, f[i]);
  return acc;
}

std::string Mat::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < n_; ++i) {
    if (i) out << ";";
    for (int j = 0; j < n_; ++j) out << (j ? "," : "") << (*this)(i, j);
  }
  out << "]";
  return out.str();
}

namespace {

// Rank of a list of vectors over the residue field (ring with r = 1).
int field_rank(const Ring& F, std::vector<std::vector<Ring::Value>> rows) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto s = F.inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = F.mul(x, s);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const auto factor = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_regular(const Mat& A) {
  const Mat a = A.ring()->r() == 1 ? A : A.reduce(1);
  std::vector<std::vector<Ring::Value>> powers;
  Mat power = Mat::identity(a.ring(), a.n());
  for (int k = 0; k < a.n(); ++k) {
    powers.push_back(power.entries());
    power = power * a;
  }
  return field_rank(*a.ring(), powers) == a.n();
}

std::uint64_t unit_group_order(const RingSpec& spec, int n) {
  auto ring = Ring::make(spec);
  const std::uint64_t q = ring->q();
  unsigned __int128 order = 1;
  const auto qn = static_cast<unsigned __int128>([&] {
    std::uint64_t v = 1;
    for (int i = 0; i < n; ++i) v *= q;
    return v;
  }());
  unsigned __int128 qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  for (int i = 0; i < (spec.r - 1) * n * n; ++i) order *= q;
  require(order < (static_cast<unsigned __int128>(1) << 63), ErrorCode::CapExceeded, "group order overflows 63 bits");
  return static_cast<std::uint64_t>(order);
}

}  // namespace regrep
