#include "cgt/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cgt/stallings.hpp"

namespace cgt {

  namespace {
    std::string letter_name(Letter l, Alphabet const& alphabet) {
      return alphabet.name(l.gen) + (l.sign < 0 ? "^-1" : "");
    }

    Endomorphism free_map(Alphabet const& alphabet, std::vector<Word> images) {
      return Endomorphism(FreeDomain{alphabet}, std::move(images));
    }

    WhiteheadMove make_multiplier(Alphabet const&     alphabet,
                                  Letter              a,
                                  std::vector<Letter> affected) {
      std::size_t const n = alphabet.size();
      std::vector<bool> in(2 * n, false);
      for (Letter l : affected) {
        in[l.slot()] = true;
      }
      std::vector<Word> images;
      Word const        aw(a);
      for (std::size_t g = 0; g < n; ++g) {
        Word x = gen(g);
        if (g == a.gen) {
          images.push_back(x);
          continue;
        }
        bool pos = in[2 * g], neg = in[2 * g + 1];
        if (pos && neg) {
          images.push_back(aw.inverse() * x * aw);
        } else if (pos) {
          images.push_back(x * aw);
        } else if (neg) {
          images.push_back(aw.inverse() * x);
        } else {
          images.push_back(x);
        }
      }
      return WhiteheadMove{WhiteheadMove::Kind::multiplier, a,
                           std::move(affected),
                           free_map(alphabet, std::move(images))};
    }

    struct TupleHash {
      std::size_t operator()(std::vector<Word> const& t) const noexcept {
        std::size_t h = 0;
        for (auto const& w : t) {
          h = h * 1000003u ^ WordHash{}(w);
        }
        return h;
      }
    };

    // Letter images of a move by slot, for substitution without going
    // through the general endomorphism machinery.
    using SlotImages = std::vector<std::vector<Letter>>;

    SlotImages slot_images(WhiteheadMove const& move) {
      SlotImages out;
      for (std::size_t g = 0; g < move.map.images().size(); ++g) {
        Word const& img = move.map.image(g);
        out.push_back(img.letters());
        out.push_back(img.inverse().letters());
      }
      return out;
    }

    // Substitutes into `out` and returns the [lo, hi) range of the (cyclic)
    // reduction.
    std::pair<std::size_t, std::size_t> substitute(SlotImages const&    images,
                                                   Word const&          w,
                                                   bool                 cyclic,
                                                   std::vector<Letter>& out) {
      out.clear();
      for (Letter l : w) {
        for (Letter x : images[l.slot()]) {
          if (!out.empty() && out.back().cancels(x)) {
            out.pop_back();
          } else {
            out.push_back(x);
          }
        }
      }
      std::size_t lo = 0, hi = out.size();
      while (cyclic && hi - lo >= 2 && out[lo].cancels(out[hi - 1])) {
        ++lo;
        --hi;
      }
      return {lo, hi};
    }

    // Image of the tuple, or nothing if its total length exceeds
    // `max_length`.
    std::optional<std::vector<Word>> image_tuple(SlotImages const&     images,
                                                 std::span<Word const> words,
                                                 bool                  cyclic,
                                                 std::size_t max_length) {
      thread_local std::vector<Letter> buffer;
      std::vector<std::pair<std::size_t, std::size_t>> ranges;
      std::size_t total = 0;
      std::vector<Word> out;
      out.reserve(words.size());
      for (auto const& w : words) {
        auto [lo, hi] = substitute(images, w, cyclic, buffer);
        total += hi - lo;
        if (total > max_length) {
          return std::nullopt;
        }
        out.emplace_back(std::span<Letter const>(buffer.data() + lo, hi - lo));
      }
      return out;
    }
  }  // namespace

  std::string WhiteheadMove::describe(Alphabet const& alphabet) const {
    std::ostringstream out;
    if (kind == Kind::permutation) {
      out << "permute";
      for (std::size_t g = 0; g < map.images().size(); ++g) {
        out << ' ' << alphabet.name(g) << "->"
            << letter_name(map.image(g)[0], alphabet);
      }
    } else {
      out << "multiply by " << letter_name(multiplier, alphabet) << " on {";
      for (std::size_t i = 0; i < affected.size(); ++i) {
        out << (i ? " " : "") << letter_name(affected[i], alphabet);
      }
      out << '}';
    }
    return out.str();
  }

  std::size_t multiplier_move_count(std::size_t rank) {
    if (rank == 0) {
      return 0;
    }
    std::size_t p = 1;
    for (std::size_t i = 1; i < rank; ++i) {
      p *= 4;
    }
    return 2 * rank * (p - 1);
  }

  std::vector<WhiteheadMove> multiplier_moves(Alphabet const& alphabet) {
    std::size_t const          n = alphabet.size();
    std::vector<WhiteheadMove> moves;
    for (std::size_t s = 0; s < 2 * n; ++s) {
      Letter const        a = Letter::from_slot(s);
      std::vector<Letter> others;
      for (std::size_t o = 0; o < 2 * n; ++o) {
        if (o / 2 != a.gen) {
          others.push_back(Letter::from_slot(o));
        }
      }
      for (std::size_t mask = 1; mask < (std::size_t(1) << others.size());
           ++mask) {
        std::vector<Letter> affected;
        for (std::size_t i = 0; i < others.size(); ++i) {
          if (mask >> i & 1) {
            affected.push_back(others[i]);
          }
        }
        moves.push_back(make_multiplier(alphabet, a, std::move(affected)));
      }
    }
    return moves;
  }

  std::vector<WhiteheadMove> whitehead_moves(Alphabet const& alphabet) {
    std::size_t const          n = alphabet.size();
    std::vector<WhiteheadMove> moves;
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t signs = 0; signs < (std::size_t(1) << n); ++signs) {
        std::vector<Word> images;
        for (std::size_t g = 0; g < n; ++g) {
          images.push_back(gen(perm[g], (signs >> g & 1) ? -1 : 1));
        }
        moves.push_back(WhiteheadMove{WhiteheadMove::Kind::permutation,
                                      Letter{}, {},
                                      free_map(alphabet, std::move(images))});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto two = multiplier_moves(alphabet);
    moves.insert(moves.end(), std::make_move_iterator(two.begin()),
                 std::make_move_iterator(two.end()));
    return moves;
  }

  WhiteheadMove inverse(WhiteheadMove const& move, Alphabet const& alphabet) {
    if (move.kind == WhiteheadMove::Kind::multiplier) {
      return make_multiplier(alphabet, move.multiplier.inverse(),
                             move.affected);
    }
    std::vector<Word> images(alphabet.size());
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      Letter l         = move.map.image(g)[0];
      images[l.gen]    = gen(g, l.sign);
    }
    return WhiteheadMove{WhiteheadMove::Kind::permutation, Letter{}, {},
                         free_map(alphabet, std::move(images))};
  }

  std::size_t total_length(std::span<Word const> words) {
    std::size_t total = 0;
    for (auto const& w : words) {
      total += w.size();
    }
    return total;
  }

  MinimizationTrace minimize_tuple(std::span<Word const> words,
                                   Alphabet const&       alphabet,
                                   bool                  cyclic) {
    MinimizationTrace trace;
    trace.initial.assign(words.begin(), words.end());
    std::vector<Word> current = trace.initial;
    if (cyclic) {
      for (auto& w : current) {
        w = cyclically_reduce(w).core;
      }
    }
    auto const moves    = multiplier_moves(alphabet);
    std::vector<SlotImages> images;
    for (auto const& move : moves) {
      images.push_back(slot_images(move));
    }
    bool       improved = true;
    while (improved) {
      improved = false;
      std::size_t const len = total_length(current);
      if (len == 0) {
        break;
      }
      for (std::size_t m = 0; m < moves.size(); ++m) {
        auto next = image_tuple(images[m], current, cyclic, len - 1);
        if (next) {
          current = std::move(*next);
          trace.moves.push_back(moves[m]);
          improved = true;
          break;
        }
      }
    }
    trace.final = std::move(current);
    return trace;
  }

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::yes:
        return "true";
      case Verdict::no:
        return "false";
      case Verdict::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  namespace {
    // Tuple of distinct single letters.
    bool is_basis_subtuple(std::span<Word const> words) {
      return std::all_of(words.begin(), words.end(),
                         [](Word const& w) { return w.size() == 1; });
    }

    WhiteheadResult decide(std::vector<Word>       start,
                           Alphabet const&         alphabet,
                           bool                    cyclic,
                           WhiteheadOptions const& options) {
      WhiteheadResult result;
      std::vector<SlotImages> moves;
      for (auto const& move : whitehead_moves(alphabet)) {
        moves.push_back(slot_images(move));
      }
      while (true) {
        result.trace = minimize_tuple(start, alphabet, cyclic);
        auto const& minimal = result.trace.final;
        if (is_basis_subtuple(minimal)) {
          result.verdict = Verdict::yes;
          return result;
        }
        // Breadth-first search of the orbit at constant length.
        std::size_t const len = total_length(minimal);
        std::unordered_set<std::vector<Word>, TupleHash> visited{minimal};
        std::deque<std::vector<Word>>                    frontier{minimal};
        std::optional<std::vector<Word>>                 shorter;
        while (!frontier.empty() && !shorter) {
          auto tuple = std::move(frontier.front());
          frontier.pop_front();
          for (auto const& move : moves) {
            auto image = image_tuple(move, tuple, cyclic, len);
            if (!image) {
              continue;
            }
            auto& next = *image;
            if (total_length(next) < len) {
              shorter = std::move(next);
              break;
            }
            if (visited.insert(next).second) {
              if (visited.size() >= options.max_visited) {
                result.visited     = visited.size();
                result.cap_reached = true;
                result.verdict     = Verdict::inconclusive;
                return result;
              }
              frontier.push_back(std::move(next));
            }
          }
        }
        result.visited += visited.size();
        if (!shorter) {
          result.verdict = Verdict::no;
          return result;
        }
        start = std::move(*shorter);
      }
    }
  }  // namespace

  WhiteheadResult is_primitive(Word const&             w,
                               Alphabet const&         alphabet,
                               WhiteheadOptions const& options) {
    if (w.empty()) {
      throw DomainError("is_primitive: the empty word is not primitive");
    }
    return decide({w}, alphabet, true, options);
  }

  WhiteheadResult is_free_factor(std::span<Word const>   basis,
                                 Alphabet const&         alphabet,
                                 WhiteheadOptions const& options) {
    for (auto const& w : basis) {
      if (w.empty()) {
        throw DomainError("is_free_factor: basis contains the empty word");
      }
    }
    auto graph = build_subgroup_graph(basis, alphabet.size());
    if (cgt::basis(graph).rank != basis.size()) {
      throw DomainError("is_free_factor: words are not independent");
    }
    return decide({basis.begin(), basis.end()}, alphabet, false, options);
  }

}  // namespace cgt
