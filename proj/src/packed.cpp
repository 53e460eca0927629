#include "regrep/packed.hpp"

#include <bit>

#include "regrep/error.hpp"

namespace regrep {

MatCodec::MatCodec(RingPtr ring, int n) : ring_(std::move(ring)), n_(n) {
  require(n >= 1 && n <= kMaxN, ErrorCode::ShapeMismatch, "packed matrices support 1 <= N <= 4");
  bits_ = std::bit_width(ring_->size() - 1);
  if (bits_ == 0) bits_ = 1;
  require(bits_ * n * n <= 64, ErrorCode::CapExceeded, "matrix does not fit in a 64-bit key");
  mask_ = bits_ == 64 ? ~Key{0} : (Key{1} << bits_) - 1;
  for (int k = 0; k < n * n; ++k) shift_[k] = (n * n - 1 - k) * bits_;
  identity_ = encode(Mat::identity(ring_, n));
  power_of_two_ = std::has_single_bit(ring_->size());
  family_a_ = ring_->family() == Family::IntegersModPrimePower;
}

void MatCodec::unpack(Key key, Entries& out) const {
  for (int k = 0; k < n_ * n_; ++k) out[k] = (key >> shift_[k]) & mask_;
}

Key MatCodec::pack(const Entries& in) const {
  Key key = 0;
  for (int k = 0; k < n_ * n_; ++k) key |= in[k] << shift_[k];
  return key;
}

Key MatCodec::encode(const Mat& m) const {
  require(m.n() == n_ && m.ring()->spec() == ring_->spec(), ErrorCode::SpecMismatch, "matrix does not match codec");
  Entries e{};
  for (int k = 0; k < n_ * n_; ++k) e[k] = m.entries()[k];
  return pack(e);
}

Mat MatCodec::decode(Key key) const {
  Entries e{};
  unpack(key, e);
  return Mat(ring_, n_, std::vector<Ring::Value>(e.begin(), e.begin() + n_ * n_));
}

Key MatCodec::mul(Key a, Key b) const {
  Entries x{}, y{}, z{};
  unpack(a, x);
  unpack(b, y);
  const Ring& R = *ring_;
  const int n = n_;
  if (family_a_) {
    const Ring::Value size = R.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        unsigned __int128 acc = 0;
        for (int k = 0; k < n; ++k) acc += static_cast<unsigned __int128>(x[i * n + k]) * y[k * n + j];
        z[i * n + j] = power_of_two_ ? static_cast<Ring::Value>(acc) & (size - 1) : static_cast<Ring::Value>(acc % size);
      }
  } else if (R.has_tables()) {
    const std::uint8_t* add = R.add_table();
    const std::uint8_t* mul = R.mul_table();
    const Ring::Value size = R.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Ring::Value acc = 0;
        for (int k = 0; k < n; ++k) acc = add[acc * size + mul[x[i * n + k] * size + y[k * n + j]]];
        z[i * n + j] = acc;
      }
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Ring::Value acc = 0;
        for (int k = 0; k < n; ++k) acc = R.add(acc, R.mul(x[i * n + k], y[k * n + j]));
        z[i * n + j] = acc;
      }
  }
  return pack(z);
}

Key MatCodec::inv(Key a) const {
  Entries m{}, inv{};
  unpack(a, m);
  const Ring& R = *ring_;
  const int n = n_;
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (pivot < n && !R.is_unit(m[pivot * n + c])) ++pivot;
    require(pivot < n, ErrorCode::NotAUnit, "packed matrix is not invertible");
    if (pivot != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m[c * n + j], m[pivot * n + j]);
        std::swap(inv[c * n + j], inv[pivot * n + j]);
      }
    const auto s = R.inv(m[c * n + c]);
    for (int j = 0; j < n; ++j) {
      m[c * n + j] = R.mul(m[c * n + j], s);
      inv[c * n + j] = R.mul(inv[c * n + j], s);
    }
    for (int i = 0; i < n; ++i) {
      const auto factor = m[i * n + c];
      if (i == c || factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        m[i * n + j] = R.sub(m[i * n + j], R.mul(factor, m[c * n + j]));
        inv[i * n + j] = R.sub(inv[i * n + j], R.mul(factor, inv[c * n + j]));
      }
    }
  }
  return pack(inv);
}

Key MatCodec::pow(Key a, std::uint64_t e) const {
  Key result = identity_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

}  // namespace regrep
