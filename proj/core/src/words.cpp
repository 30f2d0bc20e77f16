#include "runcube/words.hpp"

#include <string>

#include "runcube/errors.hpp"

namespace runcube {
namespace {

bool is_fibonacci(const BitWord& w) {
  const std::uint64_t b = w.bits();
  return (b & (b >> 1)) == 0;
}

// Linear run scan: every maximal run of 1s must be followed by a strictly
// longer run of 0s.
bool is_run_constrained(const BitWord& w) {
  const int n = w.length();
  int i = 0;
  while (i < n) {
    if (!w.bit_at(i)) {
      ++i;
      continue;
    }
    int ones = 0;
    while (i < n && w.bit_at(i)) {
      ++ones;
      ++i;
    }
    int zeros = 0;
    while (i < n && !w.bit_at(i)) {
      ++zeros;
      ++i;
    }
    if (zeros <= ones) return false;
  }
  return true;
}

// Rotate so the word starts at a 0->1 boundary, then run the linear scan;
// the rotated word ends with a 0, so no run wraps around.
bool is_circular_run_constrained(const BitWord& w) {
  const int n = w.length();
  if (n == 0 || w.weight() == 0) return true;
  if (w.weight() == n) return false;
  int start = -1;
  for (int i = 0; i < n; ++i) {
    const int prev = (i + n - 1) % n;
    if (w.bit_at(i) && !w.bit_at(prev)) {
      start = i;
      break;
    }
  }
  std::uint64_t rotated = 0;
  for (int i = 0; i < n; ++i) {
    rotated = (rotated << 1) | static_cast<std::uint64_t>(w.bit_at((start + i) % n));
  }
  return is_run_constrained(BitWord(rotated, n));
}

[[noreturn]] void fail_at(std::size_t pos, AlphabetId alphabet) {
  const char* name = alphabet == AlphabetId::Run ? "run" : "fibonacci";
  throw NotInLanguage(pos, "no " + std::string(name) + " letter matches at offset " +
                               std::to_string(pos));
}

void enumerate_words(AlphabetId alphabet, int length, std::uint64_t acc, int filled,
                     std::vector<BitWord>& out) {
  if (filled == length) {
    out.emplace_back(acc, length);
    return;
  }
  // Letter k has length 2k+1; letters are tried in ascending index order,
  // which is also lexicographic order, so the output comes out sorted.
  for (int k = 0; 2 * k + 1 <= length - filled; ++k) {
    const BitWord letter = alphabet_letter(alphabet, k);
    enumerate_words(alphabet, length, (acc << letter.length()) | letter.bits(),
                    filled + letter.length(), out);
  }
}

}  // namespace

BitWord alphabet_letter(AlphabetId alphabet, int index) {
  if (index < 0 || 2 * index + 1 > BitWord::kMaxLength) {
    throw std::invalid_argument("alphabet letter index out of range");
  }
  if (index == 0) return BitWord(0, 1);
  if (alphabet == AlphabetId::Run) {
    // 1^i 0^{i+1}
    const std::uint64_t ones = (std::uint64_t{1} << index) - 1;
    return BitWord(ones << (index + 1), 2 * index + 1);
  }
  // (10)^i 0
  std::uint64_t bits = 0;
  for (int k = 0; k < index; ++k) bits = (bits << 2) | 0b10u;
  return BitWord(bits << 1, 2 * index + 1);
}

bool classify(const BitWord& word, WordKind kind) {
  switch (kind) {
    case WordKind::Fibonacci:
      return is_fibonacci(word);
    case WordKind::RunConstrained:
      return is_run_constrained(word);
    case WordKind::CircularRunConstrained:
      return is_circular_run_constrained(word);
  }
  return false;
}

std::vector<int> factorize(const BitWord& word, AlphabetId alphabet) {
  const int n = word.length();
  std::vector<int> letters;
  int pos = 0;
  while (pos < n) {
    if (!word.bit_at(pos)) {
      letters.push_back(0);
      ++pos;
      continue;
    }
    const int start = pos;
    if (alphabet == AlphabetId::Run) {
      int ones = 0;
      while (pos < n && word.bit_at(pos)) {
        ++ones;
        ++pos;
      }
      // exactly ones+1 zeros complete the letter
      if (pos + ones + 1 > n) fail_at(static_cast<std::size_t>(start), alphabet);
      for (int k = 0; k <= ones; ++k) {
        if (word.bit_at(pos + k)) fail_at(static_cast<std::size_t>(start), alphabet);
      }
      pos += ones + 1;
      letters.push_back(ones);
    } else {
      int pairs = 0;
      while (pos < n && word.bit_at(pos)) {
        if (pos + 1 >= n || word.bit_at(pos + 1)) fail_at(static_cast<std::size_t>(start), alphabet);
        pos += 2;
        ++pairs;
      }
      // the closing 0 of (10)^i 0
      if (pos >= n) fail_at(static_cast<std::size_t>(start), alphabet);
      ++pos;
      letters.push_back(pairs);
    }
  }
  return letters;
}

BitWord concat_letters(AlphabetId alphabet, std::span<const int> indices) {
  BitWord out;
  for (int index : indices) out = out.concat(alphabet_letter(alphabet, index));
  return out;
}

BitWord phi(const BitWord& word) {
  const std::vector<int> letters = factorize(word, AlphabetId::Fibonacci);
  return concat_letters(AlphabetId::Run, letters);
}

BitWord phi_inverse(const BitWord& word) {
  const std::vector<int> letters = factorize(word, AlphabetId::Run);
  return concat_letters(AlphabetId::Fibonacci, letters);
}

std::vector<BitWord> run_constrained_words(int length) {
  std::vector<BitWord> out;
  enumerate_words(AlphabetId::Run, length, 0, 0, out);
  return out;
}

std::vector<BitWord> extended_fibonacci_words(int length) {
  std::vector<BitWord> out;
  enumerate_words(AlphabetId::Fibonacci, length, 0, 0, out);
  return out;
}

}  // namespace runcube
