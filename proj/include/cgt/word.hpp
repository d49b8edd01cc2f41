// Free-group words: reduction, cyclic reduction, conjugacy, roots,
// centralizers and abelianization.

#ifndef CGT_WORD_HPP_
#define CGT_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cgt {

  // Base of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Input that cannot be interpreted: bad tokens, unknown generators,
  // letters out of range.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A stated precondition does not hold (e.g. trivial word where a
  // nontrivial one is required).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // A generator index together with an exponent sign.
  //
  // Letters are totally ordered by (generator, sign) with +1 before -1;
  // this order drives canonical rotations, enumeration order and the
  // traversal order of subgroup graphs.
  struct Letter {
    std::uint32_t gen  = 0;
    std::int8_t   sign = 1;

    constexpr Letter inverse() const noexcept {
      return Letter{gen, static_cast<std::int8_t>(-sign)};
    }
    constexpr bool cancels(Letter other) const noexcept {
      return gen == other.gen && sign == -other.sign;
    }
    // Dense index in [0, 2 * rank): 2g for g, 2g + 1 for g^-1.
    constexpr std::size_t slot() const noexcept {
      return 2 * static_cast<std::size_t>(gen) + (sign < 0 ? 1 : 0);
    }
    static constexpr Letter from_slot(std::size_t s) noexcept {
      return Letter{static_cast<std::uint32_t>(s / 2),
                    static_cast<std::int8_t>(s % 2 == 0 ? 1 : -1)};
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
      return a.slot() <=> b.slot();
    }
  };

  // Ordered list of distinct generator names.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept {
      return _names.size();
    }
    bool empty() const noexcept {
      return _names.empty();
    }
    std::string const& name(std::size_t gen) const {
      return _names.at(gen);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<std::size_t> find(std::string_view name) const;

    // The alphabet followed by `more` (names must stay distinct).
    Alphabet extended(std::vector<std::string> const& more) const;

    friend bool operator==(Alphabet const& a, Alphabet const& b) {
      return a._names == b._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

  bool is_valid_generator_name(std::string_view name);

  // A freely reduced word. Every constructor reduces, so two Words are equal
  // iff they represent the same element of the free group.
  class Word {
   public:
    Word() = default;
    explicit Word(Letter l) : _letters{l} {}
    // Freely reduces `letters`; does not range-check generators.
    explicit Word(std::span<Letter const> letters);
    Word(std::initializer_list<Letter> letters)
        : Word(std::span<Letter const>(letters.begin(), letters.size())) {}

    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    Letter front() const {
      return _letters.front();
    }
    Letter back() const {
      return _letters.back();
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }

    Word inverse() const;
    // w^k for any integer k.
    Word pow(long k) const;
    // Subword [pos, pos + len), re-reduced (always reduced already).
    Word subword(std::size_t pos, std::size_t len) const;

    Word& operator*=(Word const& rhs);
    friend Word operator*(Word lhs, Word const& rhs) {
      return lhs *= rhs;
    }

    friend bool operator==(Word const&, Word const&) = default;
    // Lexicographic on letters.
    friend std::strong_ordering operator<=>(Word const& a, Word const& b);

   private:
    std::vector<Letter> _letters;
  };

  // Length first, then lexicographic.
  bool shortlex_less(Word const& a, Word const& b);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  // Free reduction with range checking against `alphabet`.
  Word reduce(std::span<Letter const> letters, Alphabet const& alphabet);

  struct CyclicReduction {
    Word core;        // cyclically reduced
    Word conjugator;  // w = conjugator * core * conjugator^-1
  };

  CyclicReduction cyclically_reduce(Word const& w);

  bool is_cyclically_reduced(Word const& w);

  // Rotation of a cyclically reduced word that is lexicographically least.
  Word least_rotation(Word const& core);

  // The cyclic word of w: the least rotation of its cyclic core.
  Word cyclic_normal_form(Word const& w);

  // Some g with g * w1 * g^-1 == w2, if w1 and w2 are conjugate.
  //
  // With w_i = c_i k_i c_i^-1 (k_i cyclic cores), the witness is
  // c2 * s * c1^-1, where i is the smallest rotation offset carrying k1 onto
  // k2 and s is the shorter of k1[i..) and k1[..i)^-1 (the suffix on ties).
  std::optional<Word> is_conjugate(Word const& w1, Word const& w2);

  struct Root {
    Word        root;
    std::size_t exponent = 0;
  };

  // w = root^exponent with exponent maximal. Throws DomainError on the empty
  // word.
  Root extract_root(Word const& w);

  bool is_root_free(Word const& w);

  // Generator of the (cyclic) centralizer of w.
  Word centralizer(Word const& w);

  // Exponent k with w == c^k, if w lies in the cyclic subgroup <c>.
  // c must be nontrivial.
  std::optional<long> power_of(Word const& w, Word const& c);

  using AbelianVector = std::vector<long>;

  AbelianVector abelianize(std::span<Letter const> letters,
                           std::size_t             rank);
  inline AbelianVector abelianize(Word const& w, std::size_t rank) {
    return abelianize(std::span<Letter const>(w.letters()), rank);
  }

  // Commutator a b a^-1 b^-1.
  Word commutator(Word const& a, Word const& b);

  // Word of a single generator with the given sign.
  inline Word gen(std::size_t g, int sign = 1) {
    return Word(Letter{static_cast<std::uint32_t>(g),
                       static_cast<std::int8_t>(sign < 0 ? -1 : 1)});
  }

}  // namespace cgt

#endif  // CGT_WORD_HPP_
