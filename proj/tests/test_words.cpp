#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "runcube/errors.hpp"
#include "runcube/words.hpp"
#include "test_support.hpp"

using namespace runcube;

namespace {

BitWord w(const char* text) { return BitWord::parse(text); }

// Independent membership predicate for the extended-Fibonacci monoid: the
// empty word, the singleton 0, and the Fibonacci strings ending in 00.
bool in_fibonacci_monoid(const BitWord& word) {
  if (word.length() == 0) return true;
  if (word.length() == 1) return !word.bit_at(0);
  if (!classify(word, WordKind::Fibonacci)) return false;
  return !word.bit_at(word.length() - 1) && !word.bit_at(word.length() - 2);
}

bool factorizes(const BitWord& word, AlphabetId alphabet) {
  try {
    factorize(word, alphabet);
    return true;
  } catch (const NotInLanguage&) {
    return false;
  }
}

}  // namespace

TEST_CASE("alphabet letters") {
  CHECK(alphabet_letter(AlphabetId::Run, 0).str() == "0");
  CHECK(alphabet_letter(AlphabetId::Run, 1).str() == "100");
  CHECK(alphabet_letter(AlphabetId::Run, 2).str() == "11000");
  CHECK(alphabet_letter(AlphabetId::Run, 3).str() == "1110000");
  CHECK(alphabet_letter(AlphabetId::Fibonacci, 0).str() == "0");
  CHECK(alphabet_letter(AlphabetId::Fibonacci, 1).str() == "100");
  CHECK(alphabet_letter(AlphabetId::Fibonacci, 2).str() == "10100");
  CHECK(alphabet_letter(AlphabetId::Fibonacci, 3).str() == "1010100");
}

TEST_CASE("classify examples") {
  CHECK(classify(w("01001110000"), WordKind::RunConstrained));
  CHECK(classify(w(""), WordKind::Fibonacci));
  CHECK(classify(w(""), WordKind::RunConstrained));
  CHECK(classify(w(""), WordKind::CircularRunConstrained));
  CHECK_FALSE(classify(w("110"), WordKind::CircularRunConstrained));
  CHECK(classify(w("100100"), WordKind::CircularRunConstrained));

  CHECK(classify(w("10100"), WordKind::Fibonacci));
  CHECK_FALSE(classify(w("110"), WordKind::Fibonacci));
  CHECK_FALSE(classify(w("10"), WordKind::RunConstrained));
  CHECK(classify(w("100"), WordKind::RunConstrained));
  CHECK_FALSE(classify(w("1"), WordKind::RunConstrained));
  CHECK(classify(w("0000"), WordKind::CircularRunConstrained));
  CHECK_FALSE(classify(w("1111"), WordKind::CircularRunConstrained));
  CHECK_FALSE(classify(w("1"), WordKind::CircularRunConstrained));
  // the 0-run after the final 1 wraps around
  CHECK(classify(w("010"), WordKind::CircularRunConstrained));
  CHECK_FALSE(classify(w("11000011"), WordKind::CircularRunConstrained));
}

TEST_CASE("run-constrained words of length >= 2 end with 00") {
  for (int n = 2; n <= 14; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const BitWord word(bits, n);
      if (classify(word, WordKind::RunConstrained)) {
        CHECK_FALSE(word.bit_at(n - 1));
        CHECK_FALSE(word.bit_at(n - 2));
      }
    }
  }
}

TEST_CASE("factorize examples") {
  CHECK(factorize(w("01001110000"), AlphabetId::Run) == std::vector<int>{0, 1, 3});
  CHECK(factorize(w(""), AlphabetId::Run).empty());
  CHECK(factorize(w("1010100"), AlphabetId::Fibonacci) == std::vector<int>{3});
  CHECK(factorize(w("10100100"), AlphabetId::Fibonacci) == std::vector<int>{2, 1});

  CHECK_THROWS_AS(factorize(w("110"), AlphabetId::Run), NotInLanguage);
  try {
    factorize(w("110"), AlphabetId::Run);
  } catch (const NotInLanguage& e) {
    CHECK(e.position() == 0);
  }
  try {
    factorize(w("0101"), AlphabetId::Run);
  } catch (const NotInLanguage& e) {
    CHECK(e.position() == 1);
  }
  try {
    factorize(w("011"), AlphabetId::Fibonacci);
  } catch (const NotInLanguage& e) {
    CHECK(e.position() == 1);
  }
}

TEST_CASE("factorization round-trips and matches the classify predicates") {
  for (int n = 0; n <= 12; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const BitWord word(bits, n);
      // two independent routes to language membership
      CHECK(factorizes(word, AlphabetId::Run) == classify(word, WordKind::RunConstrained));
      CHECK(factorizes(word, AlphabetId::Fibonacci) == in_fibonacci_monoid(word));
      if (classify(word, WordKind::RunConstrained)) {
        const auto letters = factorize(word, AlphabetId::Run);
        CHECK(concat_letters(AlphabetId::Run, letters) == word);
      }
      if (in_fibonacci_monoid(word)) {
        const auto letters = factorize(word, AlphabetId::Fibonacci);
        CHECK(concat_letters(AlphabetId::Fibonacci, letters) == word);
      }
    }
  }
}

TEST_CASE("factorize recovers random letter sequences") {
  auto rng = test_rng();
  std::uniform_int_distribution<int> letter_count(0, 8);
  std::uniform_int_distribution<int> letter_index(0, 4);
  for (AlphabetId alphabet : {AlphabetId::Run, AlphabetId::Fibonacci}) {
    for (int iter = 0; iter < 300; ++iter) {
      std::vector<int> letters;
      int total = 0;
      const int count = letter_count(rng);
      for (int i = 0; i < count && total <= 40; ++i) {
        const int index = letter_index(rng);
        letters.push_back(index);
        total += 2 * index + 1;
      }
      const BitWord word = concat_letters(alphabet, letters);
      CHECK(factorize(word, alphabet) == letters);
    }
  }
}

TEST_CASE("phi examples") {
  CHECK(phi(w("10100")) == w("11000"));
  CHECK(phi(w("0")) == w("0"));
  CHECK(phi(w("0100")) == w("0100"));
  CHECK(phi_inverse(w("11000")) == w("10100"));
  CHECK_THROWS_AS(phi(w("11000")), NotInLanguage);
}

TEST_CASE("phi is a length-preserving bijection between the monoids") {
  for (int n = 0; n <= 14; ++n) {
    std::set<BitWord> image;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const BitWord word(bits, n);
      if (!in_fibonacci_monoid(word)) continue;
      const BitWord mapped = phi(word);
      CHECK(mapped.length() == n);
      CHECK(classify(mapped, WordKind::RunConstrained));
      CHECK(phi_inverse(mapped) == word);
      image.insert(mapped);
    }
    CHECK(image.size() == run_constrained_words(n).size());
    // and back the other way
    for (const BitWord& word : run_constrained_words(n)) {
      CHECK(phi(phi_inverse(word)) == word);
    }
  }
}

TEST_CASE("language sizes agree for every length") {
  for (int n = 0; n <= 20; ++n) {
    std::size_t run_count = 0;
    std::size_t fib_count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const BitWord word(bits, n);
      run_count += classify(word, WordKind::RunConstrained);
      fib_count += in_fibonacci_monoid(word);
    }
    CHECK(run_count == fib_count);
    // the generators enumerate the same languages
    CHECK(run_constrained_words(n).size() == run_count);
    CHECK(extended_fibonacci_words(n).size() == fib_count);
  }
}

TEST_CASE("word generators emit sorted valid words") {
  for (int n = 0; n <= 12; ++n) {
    const auto words = run_constrained_words(n);
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(classify(words[i], WordKind::RunConstrained));
      if (i > 0) CHECK(words[i - 1] < words[i]);
    }
  }
}
