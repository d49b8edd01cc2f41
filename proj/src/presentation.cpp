#include "cgt/presentation.hpp"

#include <algorithm>

namespace cgt {

  namespace {
    void check_in_range(Word const& w,
                        std::size_t lo,
                        std::size_t hi,
                        char const* what) {
      for (Letter l : w) {
        if (l.gen < lo || l.gen >= hi) {
          throw ParseError(std::string(what) + " uses a generator outside its "
                           "factor");
        }
      }
    }
  }  // namespace

  HnnPresentation::HnnPresentation(Alphabet    base,
                                   std::string stable,
                                   Word        u,
                                   Word        v)
      : _base(std::move(base)),
        _full(_base.extended({stable})),
        _stable(std::move(stable)),
        _u(std::move(u)),
        _v(std::move(v)) {
    if (_u.empty() || _v.empty()) {
      throw DomainError("HNN edge words must be nontrivial");
    }
    check_in_range(_u, 0, _base.size(), "u");
    check_in_range(_v, 0, _base.size(), "v");
  }

  bool HnnPresentation::is_base_word(Word const& w) const {
    return std::none_of(w.begin(), w.end(),
                        [&](Letter l) { return l.gen == stable(); });
  }

  AmalgamPresentation::AmalgamPresentation(Alphabet first,
                                           Alphabet second,
                                           Word     c1,
                                           Word     c2)
      : _first(std::move(first)),
        _second(std::move(second)),
        _full(_first.extended(_second.names())),
        _c1(std::move(c1)),
        _c2(std::move(c2)) {
    if (_c1.empty() || _c2.empty()) {
      throw DomainError("amalgam edge words must be nontrivial");
    }
    check_in_range(_c1, 0, _first.size(), "c1");
    check_in_range(_c2, _first.size(), _full.size(), "c2");
  }

  Alphabet const& alphabet_of(Domain const& domain) {
    return std::visit(
        [](auto const& d) -> Alphabet const& {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, FreeDomain>) {
            return d.alphabet;
          } else {
            return d.full();
          }
        },
        domain);
  }

}  // namespace cgt
