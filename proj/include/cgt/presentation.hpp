// One-edge cyclic splittings of free groups: HNN extensions <H, t | u^t = v>
// and amalgams B1 *_{c1 = c2} B2.

#ifndef CGT_PRESENTATION_HPP_
#define CGT_PRESENTATION_HPP_

#include <string>
#include <variant>

#include "cgt/word.hpp"

namespace cgt {

  // <H, t | u^t = v> over a free base group H.
  //
  // Orientation is fixed once and for all: u^t = v means t^-1 u t = v. Words
  // of the HNN extension live over full(), which is the base alphabet with
  // the stable letter appended; the stable letter has index base().size().
  class HnnPresentation {
   public:
    HnnPresentation(Alphabet base, std::string stable, Word u, Word v);

    Alphabet const& base() const noexcept {
      return _base;
    }
    Alphabet const& full() const noexcept {
      return _full;
    }
    std::string const& stable_name() const noexcept {
      return _stable;
    }
    std::uint32_t stable() const noexcept {
      return static_cast<std::uint32_t>(_base.size());
    }
    Word const& u() const noexcept {
      return _u;
    }
    Word const& v() const noexcept {
      return _v;
    }
    Word t(int sign = 1) const {
      return gen(stable(), sign);
    }
    bool is_base_word(Word const& w) const;

    friend bool operator==(HnnPresentation const& a,
                           HnnPresentation const& b) {
      return a._full == b._full && a._u == b._u && a._v == b._v;
    }

   private:
    Alphabet    _base;
    Alphabet    _full;
    std::string _stable;
    Word        _u;
    Word        _v;
  };

  // B1 *_{c1 = c2} B2 with B1, B2 free on disjoint alphabets.
  //
  // Words live over full() = first ++ second; c1 is a word in the first
  // block of generators and c2 in the second.
  class AmalgamPresentation {
   public:
    AmalgamPresentation(Alphabet first, Alphabet second, Word c1, Word c2);

    Alphabet const& first() const noexcept {
      return _first;
    }
    Alphabet const& second() const noexcept {
      return _second;
    }
    Alphabet const& full() const noexcept {
      return _full;
    }
    // 0 or 1.
    int factor_of(Letter l) const noexcept {
      return l.gen < _first.size() ? 0 : 1;
    }
    // Edge generator on the given side.
    Word const& edge(int factor) const noexcept {
      return factor == 0 ? _c1 : _c2;
    }

    friend bool operator==(AmalgamPresentation const& a,
                           AmalgamPresentation const& b) {
      return a._full == b._full && a._first.size() == b._first.size()
             && a._c1 == b._c1 && a._c2 == b._c2;
    }

   private:
    Alphabet _first;
    Alphabet _second;
    Alphabet _full;
    Word     _c1;
    Word     _c2;
  };

  // The group a map acts on: a free group, an HNN extension or an amalgam.
  struct FreeDomain {
    Alphabet alphabet;
    friend bool operator==(FreeDomain const&, FreeDomain const&) = default;
  };

  using Domain = std::variant<FreeDomain, HnnPresentation, AmalgamPresentation>;

  Alphabet const& alphabet_of(Domain const& domain);

}  // namespace cgt

#endif  // CGT_PRESENTATION_HPP_
