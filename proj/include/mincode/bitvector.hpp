#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mincode/errors.hpp"

namespace mincode {

/// An element of F_2^n stored as an integer; coordinate i is bit i.
using Point = std::uint32_t;

/// Largest Boolean-domain dimension any routine accepts.
inline constexpr int kMaxDimension = 24;

inline bool dot(Point x, Point y) noexcept { return (std::popcount(x & y) & 1) != 0; }

/// Dense packed bit vector over F_2.
///
/// Used both for points of F_2^n and for codewords of length 2^n - 1.
/// Bits at positions >= size() are always zero. String conversion
/// follows std::bitset: the leftmost character is the highest index.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static BitVector from_point(Point x, int n) {
    if (n < 0 || n > 32) throw PreconditionError("BitVector::from_point: n out of range");
    BitVector v(static_cast<std::size_t>(n));
    if (n > 0) {
      const word_type mask = n == 64 ? ~word_type{0} : ((word_type{1} << n) - 1);
      v.words_[0] = static_cast<word_type>(x) & mask;
    }
    return v;
  }

  static BitVector from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) {
      const char c = bits[bits.size() - 1 - k];
      if (c == '1') {
        v.set(k);
      } else if (c != '0') {
        throw ParseError("BitVector::from_string: unexpected character '" + std::string(1, c) + "'");
      }
    }
    return v;
  }

  static constexpr std::size_t word_count(std::size_t size) { return (size + kWordBits - 1) / kWordBits; }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }

  void set(std::size_t i, bool value = true) noexcept {
    const word_type bit = word_type{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= bit;
    } else {
      words_[i / kWordBits] &= ~bit;
    }
  }

  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  std::size_t popcount() const noexcept {
    std::size_t total = 0;
    for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
  }
  bool any() const noexcept { return !none(); }

  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t find_first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
    return size_;
  }

  BitVector& operator^=(const BitVector& other) {
    require_same_size(other, "operator^=");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
    return *this;
  }

  BitVector& operator&=(const BitVector& other) {
    require_same_size(other, "operator&=");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }

  BitVector& operator|=(const BitVector& other) {
    require_same_size(other, "operator|=");
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  friend bool operator==(const BitVector& a, const BitVector& b) = default;

  std::span<const word_type> words() const noexcept { return words_; }

  /// Low 32 bits as a Point; only meaningful for size() <= 32.
  Point to_point() const {
    if (size_ > 32) throw PreconditionError("BitVector::to_point: vector longer than 32 bits");
    return words_.empty() ? 0 : static_cast<Point>(words_[0]);
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t k = 0; k < size_; ++k) {
      if (test(k)) s[size_ - 1 - k] = '1';
    }
    return s;
  }

 private:
  void require_same_size(const BitVector& other, const char* where) const {
    if (size_ != other.size_) throw PreconditionError(std::string("BitVector::") + where + ": size mismatch");
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// Standard inner product over F_2.
inline bool dot(const BitVector& x, const BitVector& y) {
  if (x.size() != y.size()) throw PreconditionError("dot: dimension mismatch");
  unsigned parity = 0;
  const auto xw = x.words();
  const auto yw = y.words();
  for (std::size_t k = 0; k < xw.size(); ++k) parity ^= static_cast<unsigned>(std::popcount(xw[k] & yw[k]));
  return (parity & 1U) != 0;
}

}  // namespace mincode
