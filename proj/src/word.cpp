#include "cgt/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace cgt {

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  bool is_valid_generator_name(std::string_view name) {
    if (name.empty()) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
      return std::isalnum(c) || c == '_';
    });
  }

  Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (!is_valid_generator_name(_names[i])) {
        throw ParseError("invalid generator name '" + _names[i] + "'");
      }
      if (!_index.emplace(_names[i], i).second) {
        throw ParseError("duplicate generator name '" + _names[i] + "'");
      }
    }
  }

  std::optional<std::size_t> Alphabet::find(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Alphabet Alphabet::extended(std::vector<std::string> const& more) const {
    auto names = _names;
    names.insert(names.end(), more.begin(), more.end());
    return Alphabet(std::move(names));
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void push_reduced(std::vector<Letter>& out, Letter l) {
      if (!out.empty() && out.back().cancels(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
  }  // namespace

  Word::Word(std::span<Letter const> letters) {
    _letters.reserve(letters.size());
    for (Letter l : letters) {
      push_reduced(_letters, l);
    }
  }

  Word Word::inverse() const {
    Word result;
    result._letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      result._letters.push_back(it->inverse());
    }
    return result;
  }

  Word Word::pow(long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word result;
    for (long i = 0; i < std::labs(k); ++i) {
      result *= base;
    }
    return result;
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    Word result;
    result._letters.assign(_letters.begin() + pos,
                           _letters.begin() + pos + len);
    return result;
  }

  Word& Word::operator*=(Word const& rhs) {
    for (Letter l : rhs._letters) {
      push_reduced(_letters, l);
    }
    return *this;
  }

  std::strong_ordering operator<=>(Word const& a, Word const& b) {
    return std::lexicographical_compare_three_way(
        a._letters.begin(), a._letters.end(), b._letters.begin(),
        b._letters.end());
  }

  bool shortlex_less(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Letter l : w) {
      h ^= l.slot() + 1;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  Word reduce(std::span<Letter const> letters, Alphabet const& alphabet) {
    for (Letter l : letters) {
      if (l.gen >= alphabet.size() || (l.sign != 1 && l.sign != -1)) {
        throw ParseError("letter out of range for alphabet of size "
                         + std::to_string(alphabet.size()));
      }
    }
    return Word(letters);
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclic words and conjugacy
  ////////////////////////////////////////////////////////////////////////

  bool is_cyclically_reduced(Word const& w) {
    return w.size() < 2 || !w.front().cancels(w.back());
  }

  CyclicReduction cyclically_reduce(Word const& w) {
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo].cancels(w[hi - 1])) {
      ++lo;
      --hi;
    }
    return {w.subword(lo, hi - lo), w.subword(0, lo)};
  }

  namespace {
    // Start offset of the lexicographically least rotation.
    std::size_t least_rotation_offset(std::vector<Letter> const& s) {
      std::size_t const n    = s.size();
      std::size_t       best = 0;
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto const a = s[(i + j) % n].slot();
          auto const b = s[(best + j) % n].slot();
          if (a != b) {
            if (a < b) {
              best = i;
            }
            break;
          }
        }
      }
      return best;
    }

    Word rotate(Word const& core, std::size_t offset) {
      std::vector<Letter> letters(core.begin() + offset, core.end());
      letters.insert(letters.end(), core.begin(), core.begin() + offset);
      return Word(std::span<Letter const>(letters));
    }
  }  // namespace

  Word least_rotation(Word const& core) {
    return rotate(core, least_rotation_offset(core.letters()));
  }

  Word cyclic_normal_form(Word const& w) {
    return least_rotation(cyclically_reduce(w).core);
  }

  std::optional<Word> is_conjugate(Word const& w1, Word const& w2) {
    auto const r1 = cyclically_reduce(w1);
    auto const r2 = cyclically_reduce(w2);
    auto const& k1 = r1.core;
    auto const& k2 = r2.core;
    if (k1.size() != k2.size()) {
      return std::nullopt;
    }
    std::size_t const n = k1.size();
    if (n > 0 && least_rotation(k1) != least_rotation(k2)) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i) {
      bool match = true;
      for (std::size_t j = 0; j < n && match; ++j) {
        match = k1[(i + j) % n] == k2[j];
      }
      if (match) {
        Word s = 2 * i >= n ? k1.subword(i, n - i)
                            : k1.subword(0, i).inverse();
        return r2.conjugator * s * r1.conjugator.inverse();
      }
    }
    return std::nullopt;  // unreachable: canonical rotations agreed
  }

  ////////////////////////////////////////////////////////////////////////
  // Roots and centralizers
  ////////////////////////////////////////////////////////////////////////

  Root extract_root(Word const& w) {
    if (w.empty()) {
      throw DomainError("extract_root: the empty word has no root");
    }
    auto const [core, conj] = cyclically_reduce(w);
    std::size_t const n = core.size();
    for (std::size_t p = 1; p <= n; ++p) {
      if (n % p != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = p; i < n && periodic; ++i) {
        periodic = core[i] == core[i - p];
      }
      if (periodic) {
        return {conj * core.subword(0, p) * conj.inverse(), n / p};
      }
    }
    return {w, 1};  // unreachable: p == n always succeeds
  }

  bool is_root_free(Word const& w) {
    return extract_root(w).exponent == 1;
  }

  Word centralizer(Word const& w) {
    if (w.empty()) {
      throw DomainError("centralizer: the centralizer of 1 is the whole group");
    }
    return extract_root(w).root;
  }

  std::optional<long> power_of(Word const& w, Word const& c) {
    if (c.empty()) {
      throw DomainError("power_of: trivial cyclic subgroup generator");
    }
    if (w.empty()) {
      return 0;
    }
    auto const rc = extract_root(c);
    auto const rw = extract_root(w);
    long       sign;
    if (rw.root == rc.root) {
      sign = 1;
    } else if (rw.root == rc.root.inverse()) {
      sign = -1;
    } else {
      return std::nullopt;
    }
    if (rw.exponent % rc.exponent != 0) {
      return std::nullopt;
    }
    return sign * static_cast<long>(rw.exponent / rc.exponent);
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelianization
  ////////////////////////////////////////////////////////////////////////

  AbelianVector abelianize(std::span<Letter const> letters, std::size_t rank) {
    AbelianVector result(rank, 0);
    for (Letter l : letters) {
      if (l.gen >= rank) {
        throw ParseError("abelianize: letter out of range");
      }
      result[l.gen] += l.sign;
    }
    return result;
  }

  Word commutator(Word const& a, Word const& b) {
    return a * b * a.inverse() * b.inverse();
  }

}  // namespace cgt
