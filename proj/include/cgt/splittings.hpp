// Normal forms and conjugacy in one-edge cyclic splittings, and Dehn twists.
//
// HNN convention: u^t = v means t^-1 u t = v. A pinch is a subword
// t^-1 g t with g in <u> (rewritten to the matching power of v) or t g t^-1
// with g in <v> (rewritten to the matching power of u).

#ifndef CGT_SPLITTINGS_HPP_
#define CGT_SPLITTINGS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "cgt/endomorphism.hpp"
#include "cgt/presentation.hpp"
#include "cgt/report.hpp"

namespace cgt {

  ////////////////////////////////////////////////////////////////////////
  // HNN extensions
  ////////////////////////////////////////////////////////////////////////

  // g_0 t^{e_0} g_1 ... g_r t^{e_r} g_{r+1}, pinch-free.
  struct BrittonForm {
    std::vector<Word> pieces{Word()};  // base words, size = signs.size() + 1
    std::vector<int>  signs;           // exponents of the stable letter

    // Flattened word over the full HNN alphabet.
    Word to_word(HnnPresentation const& pres) const;
  };

  // Conditions (i) <u>, <v> malnormal in the base (u, v root-free) and
  // (ii) u not conjugate in the base to v or v^-1.
  Report validate_presentation(HnnPresentation const& pres);

  // Rewrites pinches leftmost first until none remains.
  BrittonForm britton_reduce(HnnPresentation const&  pres,
                             std::span<Letter const> letters);
  inline BrittonForm britton_reduce(HnnPresentation const& pres,
                                    Word const&            w) {
    return britton_reduce(pres, std::span<Letter const>(w.letters()));
  }

  // Number of stable letters; the same for every pinch-free form of an
  // element.
  inline std::size_t hnn_length(BrittonForm const& form) {
    return form.signs.size();
  }

  // w1 == w2 in the HNN extension: w1 w2^-1 reduces to the empty form.
  bool hnn_equal(HnnPresentation const& pres, Word const& w1, Word const& w2);

  // Solution of alpha^s = beta (x^s = s^-1 x s) with s involving the stable
  // letter, for base words alpha and beta.
  //
  // case 1: alpha = (u^p)^gamma, beta = (v^p)^delta, s = gamma^-1 t delta
  // case 2: alpha = (v^p)^gamma, beta = (u^p)^delta, s = gamma^-1 t^-1 delta
  struct ClassificationResult {
    bool solvable = false;
    int  which    = 0;  // 1 or 2 when solvable
    long p        = 0;
    Word gamma;
    Word delta;
    Word s;
  };

  // Requires validate_presentation(pres) to pass and alpha, beta nontrivial
  // base words; throws DomainError otherwise.
  ClassificationResult classify_base_conjugacy(HnnPresentation const& pres,
                                               Word const&            alpha,
                                               Word const&            beta);

  // Identity on the base, t -> t v^n. Since t v = u t this is also
  // t -> u^n t, the twist about the edge group on either side of t.
  Endomorphism dehn_twist(HnnPresentation const& pres, long n);

  ////////////////////////////////////////////////////////////////////////
  // Amalgams
  ////////////////////////////////////////////////////////////////////////

  struct Syllable {
    int  factor = 0;  // 0 or 1
    Word word;        // over the full alphabet, letters of one factor only

    friend bool operator==(Syllable const&, Syllable const&) = default;
  };

  // Alternating syllables, none of which lies in the edge group unless it is
  // the only one. Every syllable but the last is the shortest (then
  // lexicographically least) element of its coset g<c>, so the form is
  // unique; a lone edge-group element is written in the first factor.
  struct AmalgamForm {
    std::vector<Syllable> syllables;

    Word to_word() const;
    friend bool operator==(AmalgamForm const&, AmalgamForm const&) = default;
  };

  // Throws ParseError if consecutive syllables share a factor or a syllable
  // mixes factors.
  AmalgamForm amalgam_reduce(AmalgamPresentation const& pres,
                             std::span<Syllable const>  syllables);

  // Splits a word into maximal one-factor syllables and reduces.
  AmalgamForm amalgam_reduce(AmalgamPresentation const& pres, Word const& w);

  bool amalgam_equal(AmalgamPresentation const& pres,
                     Word const&                w1,
                     Word const&                w2);

  // Identity on the first factor, conjugation b -> c2^n b c2^-n on the
  // second.
  Endomorphism dehn_twist(AmalgamPresentation const& pres, long n);

}  // namespace cgt

#endif  // CGT_SPLITTINGS_HPP_
