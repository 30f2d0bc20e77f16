#pragma once

#include <span>
#include <vector>

#include "runcube/bitword.hpp"

namespace runcube {

/// The two infinite alphabets that generate, as free monoids, the extended
/// Fibonacci strings and the run-constrained strings:
///   Fibonacci: 0, 100, 10100, 1010100, ...   (letter i = (10)^i 0)
///   Run:       0, 100, 11000, 1110000, ...   (letter i = 1^i 0^{i+1})
enum class AlphabetId { Fibonacci, Run };

enum class WordKind { Fibonacci, RunConstrained, CircularRunConstrained };

/// The i-th letter of an alphabet; both alphabets share letter(0) = "0" and
/// letter(i) has length 2i+1.
BitWord alphabet_letter(AlphabetId alphabet, int index);

/// Language membership.
///   Fibonacci: no two consecutive 1s.
///   RunConstrained: every run of 1s is immediately followed by a strictly
///     longer run of 0s.
///   CircularRunConstrained: the same condition read cyclically; the all-zero
///     word (and the empty word) qualify, a word of all 1s does not.
bool classify(const BitWord& word, WordKind kind);

/// Unique factorization of `word` into letter indices, greedy left-to-right.
/// Throws NotInLanguage with the offset of the earliest unmatched character.
std::vector<int> factorize(const BitWord& word, AlphabetId alphabet);

BitWord concat_letters(AlphabetId alphabet, std::span<const int> indices);

/// Length-preserving bijection between the two monoids, mapping the letter
/// (10)^i 0 to 1^i 0^{i+1} under the unique factorization.
BitWord phi(const BitWord& word);           // Fibonacci-monoid -> Run-monoid
BitWord phi_inverse(const BitWord& word);   // Run-monoid -> Fibonacci-monoid

/// All run-constrained words of the given length, in lexicographic order.
std::vector<BitWord> run_constrained_words(int length);

/// All words of the extended-Fibonacci monoid of the given length, in
/// lexicographic order.
std::vector<BitWord> extended_fibonacci_words(int length);

}  // namespace runcube
