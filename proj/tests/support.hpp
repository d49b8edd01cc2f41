// Helpers shared by the test binaries: word literals, seeded random words
// and a few naive reference implementations used as oracles.

#ifndef CGT_TESTS_SUPPORT_HPP_
#define CGT_TESTS_SUPPORT_HPP_

#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "cgt/io.hpp"
#include "cgt/word.hpp"

namespace test {

  inline cgt::Alphabet alphabet(std::string const& names) {
    return cgt::parse_alphabet(names);
  }

  inline cgt::Word w(std::string const& text, cgt::Alphabet const& a) {
    return cgt::parse_word(text, a);
  }

  inline cgt::Letter random_letter(std::mt19937_64& rng, std::size_t rank) {
    std::uniform_int_distribution<std::size_t> pick(0, 2 * rank - 1);
    return cgt::Letter::from_slot(pick(rng));
  }

  // Unreduced sequence of exactly `length` letters.
  inline std::vector<cgt::Letter> random_letters(std::mt19937_64& rng,
                                                 std::size_t      rank,
                                                 std::size_t      length) {
    std::vector<cgt::Letter> out;
    for (std::size_t i = 0; i < length; ++i) {
      out.push_back(random_letter(rng, rank));
    }
    return out;
  }

  // Reduced word of exactly `length` letters.
  inline cgt::Word random_reduced(std::mt19937_64& rng,
                                  std::size_t      rank,
                                  std::size_t      length) {
    std::vector<cgt::Letter> out;
    while (out.size() < length) {
      auto l = random_letter(rng, rank);
      if (out.empty() || !out.back().cancels(l)) {
        out.push_back(l);
      }
    }
    return cgt::Word(out);
  }

  inline cgt::Word random_reduced_upto(std::mt19937_64& rng,
                                       std::size_t      rank,
                                       std::size_t      max_length) {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    return random_reduced(rng, rank, len(rng));
  }

  // Free reduction on a string of letters: lowercase is a generator,
  // uppercase its inverse. Independent of the library.
  inline std::string naive_reduce(std::string const& s) {
    std::string out;
    for (char c : s) {
      if (!out.empty() && out.back() != c &&
          std::tolower(out.back()) == std::tolower(c)) {
        out.pop_back();
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  inline std::string to_case_string(std::vector<cgt::Letter> const& letters) {
    std::string out;
    for (auto l : letters) {
      char c = static_cast<char>('a' + l.gen);
      out.push_back(l.sign > 0 ? c : static_cast<char>(std::toupper(c)));
    }
    return out;
  }

  inline std::string to_case_string(cgt::Word const& w) {
    return to_case_string(w.letters());
  }

}  // namespace test

#endif  // CGT_TESTS_SUPPORT_HPP_
