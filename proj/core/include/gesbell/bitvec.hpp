#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "gesbell/errors.hpp"

namespace ges {

// Fixed-width bit vector packed into 64-bit limbs. Bit i is qubit i (0-based).
// Width is set at construction; all binary operations require equal widths.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n_bits)
      : n_bits_(n_bits), limbs_((n_bits + 63) / 64, 0) {}

  static BitVec from_bits(const std::vector<int>& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i]) v.set(i);
    }
    return v;
  }

  // Low n_bits of a machine word, for n_bits <= 64.
  static BitVec from_word(std::uint64_t word, std::size_t n_bits) {
    BitVec v(n_bits);
    if (n_bits > 0) {
      v.limbs_[0] = n_bits >= 64 ? word : (word & ((std::uint64_t{1} << n_bits) - 1));
    }
    return v;
  }

  std::size_t size() const { return n_bits_; }

  bool get(std::size_t i) const {
    return (limbs_[i / 64] >> (i % 64)) & 1;
  }
  void set(std::size_t i, bool value = true) {
    if (value) {
      limbs_[i / 64] |= std::uint64_t{1} << (i % 64);
    } else {
      limbs_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
  }
  void flip(std::size_t i) { limbs_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  void operator^=(const BitVec& other) {
    check_width(other);
    for (std::size_t w = 0; w < limbs_.size(); ++w) limbs_[w] ^= other.limbs_[w];
  }
  BitVec operator^(const BitVec& other) const {
    BitVec r = *this;
    r ^= other;
    return r;
  }
  BitVec operator&(const BitVec& other) const {
    check_width(other);
    BitVec r = *this;
    for (std::size_t w = 0; w < limbs_.size(); ++w) r.limbs_[w] &= other.limbs_[w];
    return r;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : limbs_) c += std::popcount(w);
    return c;
  }
  // Parity of popcount(*this & other), without materializing the AND.
  bool and_parity(const BitVec& other) const {
    check_width(other);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < limbs_.size(); ++w) acc ^= limbs_[w] & other.limbs_[w];
    return std::popcount(acc) & 1;
  }
  bool any() const {
    for (std::uint64_t w : limbs_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  // Index of the lowest set bit; size() when empty.
  std::size_t lowest_set() const {
    for (std::size_t w = 0; w < limbs_.size(); ++w) {
      if (limbs_[w] != 0) return w * 64 + std::countr_zero(limbs_[w]);
    }
    return n_bits_;
  }

  std::uint64_t as_word() const {
    if (n_bits_ > 64) throw error("BitVec::as_word: width exceeds 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
  }

  bool operator==(const BitVec& other) const {
    return n_bits_ == other.n_bits_ && limbs_ == other.limbs_;
  }
  bool operator!=(const BitVec& other) const { return !(*this == other); }

 private:
  void check_width(const BitVec& other) const {
    if (n_bits_ != other.n_bits_) throw validation_error("bit-vector width mismatch");
  }

  std::size_t n_bits_ = 0;
  std::vector<std::uint64_t> limbs_;
};

}  // namespace ges
