#include "runcube/bitword.hpp"

#include <stdexcept>

#include "runcube/errors.hpp"

namespace runcube {

BitWord::BitWord(std::uint64_t bits, int length) : bits_(bits), length_(length) {
  if (length < 0 || length > kMaxLength) {
    throw std::invalid_argument("BitWord length out of range: " + std::to_string(length));
  }
  if (length < 64 && (bits >> length) != 0) {
    throw std::invalid_argument("BitWord value does not fit the stated length");
  }
}

BitWord BitWord::parse(std::string_view text) {
  std::uint64_t bits = 0;
  if (text.size() > static_cast<std::size_t>(kMaxLength)) {
    throw std::invalid_argument("BitWord text too long");
  }
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitWord text must consist of '0'/'1' characters");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return BitWord(bits, static_cast<int>(text.size()));
}

BitWord BitWord::zeros(int length) { return BitWord(0, length); }

bool BitWord::bit_at(int pos) const {
  if (pos < 0 || pos >= length_) throw std::out_of_range("BitWord position out of range");
  return (bits_ >> (length_ - 1 - pos)) & 1u;
}

BitWord BitWord::with_flip(int pos) const {
  if (pos < 0 || pos >= length_) throw std::out_of_range("BitWord position out of range");
  return BitWord(bits_ ^ (std::uint64_t{1} << (length_ - 1 - pos)), length_);
}

BitWord BitWord::concat(const BitWord& tail) const {
  return BitWord((bits_ << tail.length_) | tail.bits_, length_ + tail.length_);
}

BitWord BitWord::append_zeros(int count) const {
  if (count < 0) throw std::invalid_argument("negative zero padding");
  return BitWord(bits_ << count, length_ + count);
}

BitWord BitWord::prefix(int count) const {
  if (count < 0 || count > length_) throw std::out_of_range("prefix length out of range");
  return BitWord(bits_ >> (length_ - count), count);
}

std::string BitWord::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (bit_at(i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

int hamming_distance(const BitWord& a, const BitWord& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("hamming_distance requires equal lengths");
  }
  return std::popcount(a.bits() ^ b.bits());
}

}  // namespace runcube
