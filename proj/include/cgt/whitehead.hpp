// Whitehead automorphisms and peak reduction: primitivity and free-factor
// detection.
//
// A type-I move permutes the generators and inverts some of them. A type-II
// move is given by a multiplier letter a and a set S of letters other than
// a^{+-1}; it sends a to a and, for every other generator x,
//
//   x -> x a        if x in S, x^-1 not in S
//   x -> a^-1 x     if x^-1 in S, x not in S
//   x -> a^-1 x a   if both are in S
//   x -> x          otherwise.
//
// With S nonempty there are 2n (4^{n-1} - 1) type-II moves in rank n, and the
// inverse of (S, a) is (S, a^-1).

#ifndef CGT_WHITEHEAD_HPP_
#define CGT_WHITEHEAD_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cgt/endomorphism.hpp"

namespace cgt {

  struct WhiteheadMove {
    enum class Kind { permutation, multiplier };

    Kind                kind;
    // Type I: images[g] is the letter generator g is sent to.
    // Type II: the multiplier and the affected set S.
    Letter              multiplier{};
    std::vector<Letter> affected;
    Endomorphism        map;

    std::string describe(Alphabet const& alphabet) const;
  };

  // All type-I moves (identity included) followed by all type-II moves.
  std::vector<WhiteheadMove> whitehead_moves(Alphabet const& alphabet);

  // Only the type-II moves, in the same order.
  std::vector<WhiteheadMove> multiplier_moves(Alphabet const& alphabet);

  // 2n (4^{n-1} - 1).
  std::size_t multiplier_move_count(std::size_t rank);

  WhiteheadMove inverse(WhiteheadMove const& move, Alphabet const& alphabet);

  struct MinimizationTrace {
    std::vector<Word>          initial;
    std::vector<Word>          final;
    std::vector<WhiteheadMove> moves;  // applied in order
  };

  std::size_t total_length(std::span<Word const> words);

  // Greedy descent: applies the first length-decreasing type-II move until
  // none decreases the total length. With `cyclic`, words are cyclically
  // reduced after every move and lengths are cyclic lengths.
  MinimizationTrace minimize_tuple(std::span<Word const> words,
                                   Alphabet const&       alphabet,
                                   bool                  cyclic = false);

  enum class Verdict { yes, no, inconclusive };

  std::string to_string(Verdict v);

  struct WhiteheadOptions {
    std::size_t max_visited = 1'000'000;
  };

  struct WhiteheadResult {
    Verdict           verdict = Verdict::no;
    // Tuples visited by the constant-length search; 0 when minimization alone
    // decided.
    std::size_t       visited = 0;
    bool              cap_reached = false;
    MinimizationTrace trace;
  };

  // w is part of some basis. Minimizes the cyclic length, then searches the
  // constant-length orbit breadth-first for a shorter image. Throws
  // DomainError on the empty word.
  WhiteheadResult is_primitive(Word const&             w,
                               Alphabet const&         alphabet,
                               WhiteheadOptions const& options = {});

  // <basis> is a free factor: the tuple lies in the Aut(F)-orbit of a
  // subtuple of the standard basis. Throws DomainError if `basis` is not
  // independent.
  WhiteheadResult is_free_factor(std::span<Word const> basis,
                                 Alphabet const&       alphabet,
                                 WhiteheadOptions const& options = {});

}  // namespace cgt

#endif  // CGT_WHITEHEAD_HPP_
