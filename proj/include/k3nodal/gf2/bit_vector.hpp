#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

#include "k3nodal/errors.hpp"

namespace k3nodal::gf2 {

/// A vector over the two-element field, packed 64 coordinates per word.
///
/// Coordinate `i` lives in bit `i % 64` of word `i / 64`. Vectors up to
/// length 128 are stored inline; longer vectors spill to the heap. Bits past
/// `size()` in the last word are always zero, so word-level comparisons and
/// popcounts are exact.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;

  explicit BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

  /// Builds a vector of length <= 64 whose coordinate i is bit i of `word`.
  static BitVector from_word(std::size_t length, word_type word) {
    if (length > word_bits) {
      throw argument_error("BitVector::from_word: length exceeds one word");
    }
    BitVector v(length);
    if (length > 0) {
      v.words_[0] = word & tail_mask(length);
    }
    return v;
  }

  /// Parses a string of '0'/'1' characters; coordinate 0 is the first character.
  static BitVector from_string(std::string_view text) {
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        v.set(i);
      } else if (text[i] != '0') {
        throw argument_error("BitVector::from_string: invalid character '" + std::string(1, text[i]) + "'");
      }
    }
    return v;
  }

  static BitVector ones(std::size_t length) {
    BitVector v(length);
    for (auto& w : v.words_) {
      w = ~word_type{0};
    }
    v.clear_tail();
    return v;
  }

  static BitVector unit(std::size_t length, std::size_t index) {
    BitVector v(length);
    v.set(index);
    return v;
  }

  [[nodiscard]] std::size_t size() const noexcept { return length_; }
  [[nodiscard]] std::size_t num_words() const noexcept { return words_.size(); }
  [[nodiscard]] std::span<const word_type> words() const noexcept { return {words_.data(), words_.size()}; }
  [[nodiscard]] word_type word(std::size_t i) const { return words_[i]; }

  [[nodiscard]] bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }

  void set(std::size_t i, bool value = true) {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

  [[nodiscard]] std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (auto x : words_) {
      w += static_cast<std::size_t>(std::popcount(x));
    }
    return w;
  }

  [[nodiscard]] bool is_zero() const noexcept {
    for (auto x : words_) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  /// Index of the lowest set coordinate, or size() if the vector is zero.
  [[nodiscard]] std::size_t find_first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) {
        return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return length_;
  }

  BitVector& operator^=(const BitVector& other) {
    check_same_length(other, "xor");
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] ^= other.words_[w];
    }
    return *this;
  }

  BitVector& operator&=(const BitVector& other) {
    check_same_length(other, "and");
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] &= other.words_[w];
    }
    return *this;
  }

  BitVector& operator|=(const BitVector& other) {
    check_same_length(other, "or");
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] |= other.words_[w];
    }
    return *this;
  }

  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }

  friend bool operator==(const BitVector& a, const BitVector& b) noexcept {
    return a.length_ == b.length_ && a.words_ == b.words_;
  }

  /// Lexicographic order on the coordinate strings (coordinate 0 first);
  /// shorter vectors sort before longer ones.
  friend bool operator<(const BitVector& a, const BitVector& b) noexcept {
    if (a.length_ != b.length_) {
      return a.length_ < b.length_;
    }
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      const word_type diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) {
        const auto bit = std::countr_zero(diff);
        return ((b.words_[w] >> bit) & 1U) != 0;
      }
    }
    return false;
  }

  /// The vector formed by coordinates `coords`, in the given order.
  [[nodiscard]] BitVector select(std::span<const std::size_t> coords) const {
    BitVector out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (test(coords[i])) {
        out.set(i);
      }
    }
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
      if (test(i)) {
        s[i] = '1';
      }
    }
    return s;
  }

 private:
  static constexpr std::size_t word_count(std::size_t length) noexcept {
    return (length + word_bits - 1) / word_bits;
  }

  static constexpr word_type tail_mask(std::size_t length) noexcept {
    const std::size_t r = length % word_bits;
    return r == 0 ? ~word_type{0} : (word_type{1} << r) - 1;
  }

  void clear_tail() noexcept {
    if (!words_.empty()) {
      words_.back() &= tail_mask(length_);
    }
  }

  void check_same_length(const BitVector& other, const char* op) const {
    if (other.length_ != length_) {
      throw dimension_error(std::string("BitVector ") + op + ": length mismatch (" + std::to_string(length_) +
                            " vs " + std::to_string(other.length_) + ")");
    }
  }

  std::size_t length_ = 0;
  boost::container::small_vector<word_type, 2> words_;
};

/// The standard dot product x.y = sum x_j y_j over GF(2).
inline bool dot(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw dimension_error("dot: length mismatch (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                          ")");
  }
  BitVector::word_type acc = 0;
  for (std::size_t w = 0; w < a.num_words(); ++w) {
    acc ^= a.word(w) & b.word(w);
  }
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace k3nodal::gf2
