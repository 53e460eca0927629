#pragma once

#include <array>
#include <cstdint>
#include <memory>

#include "regrep/mat.hpp"
#include "regrep/ring.hpp"

namespace regrep {

using Key = std::uint64_t;

// Bit-packed N x N matrices over o_r: ceil(log2 |o_r|) bits per entry,
// entry (0,0) in the most significant position, so numeric order on keys is
// lexicographic order on row-major entries.
class MatCodec {
 public:
  static constexpr int kMaxN = 4;

  MatCodec(RingPtr ring, int n);

  const RingPtr& ring() const { return ring_; }
  int n() const { return n_; }
  int bits() const { return bits_; }
  int key_bits() const { return bits_ * n_ * n_; }

  Key encode(const Mat& m) const;
  Mat decode(Key key) const;
  Ring::Value entry(Key key, int i, int j) const {
    return (key >> (shift_[i * n_ + j])) & mask_;
  }

  Key identity() const { return identity_; }
  Key mul(Key a, Key b) const;
  Key inv(Key a) const;  // a must be invertible
  Key pow(Key a, std::uint64_t e) const;
  Key conj(Key g, Key x) const { return mul(mul(g, x), inv(g)); }
  Key commutator(Key x, Key y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }

 private:
  using Entries = std::array<Ring::Value, kMaxN * kMaxN>;
  void unpack(Key key, Entries& out) const;
  Key pack(const Entries& in) const;

  RingPtr ring_;
  int n_;
  int bits_;
  Key mask_;
  std::array<int, kMaxN * kMaxN> shift_{};
  Key identity_;
  bool power_of_two_;
  bool family_a_;
};

using CodecPtr = std::shared_ptr<const MatCodec>;

}  // namespace regrep
