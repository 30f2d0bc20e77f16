#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace runcube {

/// A binary word of fixed length. Position 0 is the leftmost character of
/// the textual form; the empty word (length 0) is a valid value. Words are
/// packed into a single machine word, so the length is capped at 62 bits,
/// comfortably above the enumeration limits used anywhere in the library.
class BitWord {
 public:
  static constexpr int kMaxLength = 62;

  constexpr BitWord() = default;
  BitWord(std::uint64_t bits, int length);

  /// Parses a string of '0'/'1' characters; "" yields the empty word.
  static BitWord parse(std::string_view text);
  static BitWord zeros(int length);

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool empty() const { return length_ == 0; }
  int weight() const { return std::popcount(bits_); }

  /// Character at `pos` (0-based from the left).
  bool bit_at(int pos) const;
  BitWord with_flip(int pos) const;

  BitWord concat(const BitWord& tail) const;
  BitWord append_zeros(int count) const;
  /// The first `count` characters.
  BitWord prefix(int count) const;

  std::string str() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
    if (a.length_ != b.length_) return a.length_ <=> b.length_;
    return a.bits_ <=> b.bits_;  // same length: numeric order == lex order
  }

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// Number of positions where two words of equal length differ.
int hamming_distance(const BitWord& a, const BitWord& b);

}  // namespace runcube
