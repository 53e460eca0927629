#include "regrep/module.hpp"

#include <algorithm>

#include "regrep/error.hpp"

namespace regrep {

namespace {

void axpy(const Ring& R, Vec& y, Ring::Value a, const Vec& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = R.add(y[i], R.mul(a, x[i]));
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Ring::Value x) { return x == 0; });
}

}  // namespace

ModuleBasis::ModuleBasis(RingPtr ring, int dim) : ring_(std::move(ring)), dim_(dim) {}

ModuleBasis ModuleBasis::span(RingPtr ring, int dim, const std::vector<Vec>& generators) {
  const Ring& R = *ring;
  ModuleBasis out(ring, dim);
  std::vector<Vec> pool;
  for (const auto& g : generators) {
    require(static_cast<int>(g.size()) == dim, ErrorCode::ShapeMismatch, "generator length differs from module rank");
    if (!is_zero(g)) pool.push_back(g);
  }
  for (int c = 0; c < dim && !pool.empty(); ++c) {
    int best = -1, best_v = R.r();
    for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
      const int v = R.valuation(pool[i][c]);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best < 0) continue;
    Vec pivot = pool[best];
    pool.erase(pool.begin() + best);
    int v = 0;
    const auto unit = R.unit_part(pivot[c], v);
    // unit_part is only determined mod varpi^(r-v); any lift inverts fine.
    const auto s = R.inv(unit);
    for (auto& x : pivot) x = R.mul(x, s);
    for (auto& row : pool) {
      if (row[c] == 0) continue;
      axpy(R, row, R.neg(R.shift_down(row[c], v)), pivot);
    }
    if (v > 0) {
      Vec saturation(dim);
      for (int j = 0; j < dim; ++j) saturation[j] = R.shift_up(pivot[j], R.r() - v);
      if (!is_zero(saturation)) pool.push_back(std::move(saturation));
    }
    std::erase_if(pool, is_zero);
    out.rows_.push_back(std::move(pivot));
    out.pivots_.push_back(c);
  }
  // Reduce entries above each pivot into [0, varpi^v).
  for (std::size_t i = 0; i < out.rows_.size(); ++i) {
    const int c = out.pivots_[i];
    const int v = R.valuation(out.rows_[i][c]);
    for (std::size_t j = 0; j < i; ++j) {
      const auto x = out.rows_[j][c];
      const auto low = R.mod_pi_pow(x, v);
      if (x == low) continue;
      axpy(R, out.rows_[j], R.neg(R.shift_down(R.sub(x, low), v)), out.rows_[i]);
    }
  }
  return out;
}

ModuleBasis ModuleBasis::full(RingPtr ring, int dim) {
  std::vector<Vec> gens;
  for (int i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return span(std::move(ring), dim, gens);
}

bool ModuleBasis::contains(const Vec& v) const {
  require(static_cast<int>(v.size()) == dim_, ErrorCode::ShapeMismatch, "vector length differs from module rank");
  const Ring& R = *ring_;
  Vec x = v;
  std::size_t next = 0;
  for (int c = 0; c < dim_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      const int pv = R.valuation(rows_[next][c]);
      if (R.valuation(x[c]) < pv) return false;
      if (x[c] != 0) axpy(R, x, R.neg(R.shift_down(x[c], pv)), rows_[next]);
      ++next;
    } else if (x[c] != 0) {
      return false;
    }
  }
  return true;
}

int ModuleBasis::log_size() const {
  int total = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) total += ring_->r() - ring_->valuation(rows_[i][pivots_[i]]);
  return total;
}

std::uint64_t ModuleBasis::size() const {
  std::uint64_t s = 1;
  for (int i = 0; i < log_size(); ++i) s *= ring_->q();
  return s;
}

std::vector<int> ModuleBasis::type() const {
  // Smith form over the chain ring: repeatedly take an entry of least valuation.
  const Ring& R = *ring_;
  std::vector<Vec> m = rows_;
  std::vector<int> out;
  std::vector<bool> row_used(m.size(), false), col_used(dim_, false);
  while (true) {
    int bi = -1, bj = -1, bv = R.r();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (row_used[i]) continue;
      for (int j = 0; j < dim_; ++j) {
        if (col_used[j]) continue;
        const int v = R.valuation(m[i][j]);
        if (v < bv) {
          bv = v;
          bi = static_cast<int>(i);
          bj = j;
        }
      }
    }
    if (bi < 0) break;
    out.push_back(bv);
    row_used[bi] = true;
    col_used[bj] = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (row_used[i] || m[i][bj] == 0) continue;
      int v = 0;
      const auto u = R.unit_part(m[bi][bj], v);
      const auto factor = R.mul(R.shift_down(m[i][bj], v), R.inv(u));
      axpy(R, m[i], R.neg(factor), m[bi]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int ModuleBasis::free_rank() const {
  const auto t = type();
  return static_cast<int>(std::count(t.begin(), t.end(), 0));
}

bool ModuleBasis::is_subset_of(const ModuleBasis& other) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const Vec& v) { return other.contains(v); });
}

ModuleBasis ModuleBasis::operator+(const ModuleBasis& other) const {
  std::vector<Vec> gens = rows_;
  gens.insert(gens.end(), other.rows_.begin(), other.rows_.end());
  return span(ring_, dim_, gens);
}

ModuleBasis ModuleBasis::scaled_by_pi(int k) const {
  std::vector<Vec> gens = rows_;
  for (auto& g : gens)
    for (auto& x : g) x = ring_->shift_up(x, k);
  return span(ring_, dim_, gens);
}

bool ModuleBasis::operator==(const ModuleBasis& other) const {
  return dim_ == other.dim_ && ring_->spec() == other.ring_->spec() && rows_ == other.rows_;
}

std::vector<Vec> ModuleBasis::elements(std::uint64_t cap) const {
  require(size() <= cap, ErrorCode::CapExceeded, "module too large to enumerate");
  const Ring& R = *ring_;
  std::vector<Vec> out = {Vec(dim_, 0)};
  // Each Howell row contributes coefficients in o / varpi^(r - v).
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int v = R.valuation(rows_[i][pivots_[i]]);
    std::uint64_t count = 1;
    for (int k = 0; k < R.r() - v; ++k) count *= R.q();
    std::vector<Vec> next;
    next.reserve(out.size() * count);
    for (const auto& base : out)
      for (Ring::Value c = 0; c < count; ++c) {
        Vec x = base;
        axpy(R, x, c, rows_[i]);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ModuleBasis preimage(RingPtr ring, const std::vector<Vec>& A, const ModuleBasis& L) {
  const int m = static_cast<int>(A.size());
  const int n = L.dim();
  std::vector<Vec> gens;
  for (int i = 0; i < m; ++i) {
    require(static_cast<int>(A[i].size()) == n, ErrorCode::ShapeMismatch, "ragged linear map");
    Vec row(n + m, 0);
    std::copy(A[i].begin(), A[i].end(), row.begin());
    row[n + i] = 1;
    gens.push_back(std::move(row));
  }
  for (const auto& l : L.rows()) {
    Vec row(n + m, 0);
    std::copy(l.begin(), l.end(), row.begin());
    gens.push_back(std::move(row));
  }
  const auto big = ModuleBasis::span(ring, n + m, gens);
  std::vector<Vec> kernel_gens;
  for (const auto& row : big.rows()) {
    if (std::all_of(row.begin(), row.begin() + n, [](Ring::Value x) { return x == 0; }))
      kernel_gens.emplace_back(row.begin() + n, row.end());
  }
  return ModuleBasis::span(std::move(ring), m, kernel_gens);
}

ModuleBasis kernel(RingPtr ring, const std::vector<Vec>& A) {
  const int n = A.empty() ? 0 : static_cast<int>(A[0].size());
  return preimage(ring, A, ModuleBasis(ring, n));
}

Vec mat_to_vec(const Mat& m) { return m.entries(); }

Mat vec_to_mat(RingPtr ring, int n, const Vec& v) { return Mat(std::move(ring), n, v); }

ModuleBasis centralizer_module(const Mat& beta, int level) {
  const Mat b = level == beta.ring()->r() ? beta : beta.reduce(level);
  const auto& ring = b.ring();
  const int n = b.n();
  std::vector<Vec> A;
  for (int k = 0; k < n * n; ++k) {
    Mat e(ring, n);
    e(k / n, k % n) = 1;
    A.push_back(mat_to_vec(e * b - b * e));
  }
  return kernel(ring, A);
}

}  // namespace regrep
