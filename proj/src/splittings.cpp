#include "cgt/splittings.hpp"

#include <algorithm>

namespace cgt {

  ////////////////////////////////////////////////////////////////////////
  // HNN extensions
  ////////////////////////////////////////////////////////////////////////

  Word BrittonForm::to_word(HnnPresentation const& pres) const {
    Word result = pieces.front();
    for (std::size_t i = 0; i < signs.size(); ++i) {
      result *= pres.t(signs[i]);
      result *= pieces[i + 1];
    }
    return result;
  }

  Report validate_presentation(HnnPresentation const& pres) {
    Report report;
    auto   ru = extract_root(pres.u());
    auto   rv = extract_root(pres.v());
    report.add("u_root_free", ru.exponent == 1,
               ru.exponent == 1 ? std::string()
                                : "u is a proper power, exponent "
                                      + std::to_string(ru.exponent));
    report.add("v_root_free", rv.exponent == 1,
               rv.exponent == 1 ? std::string()
                                : "v is a proper power, exponent "
                                      + std::to_string(rv.exponent));
    bool conj = is_conjugate(pres.u(), pres.v()).has_value()
                || is_conjugate(pres.u(), pres.v().inverse()).has_value();
    report.add("u_not_conjugate_to_v", !conj,
               conj ? "u is conjugate to v or v^-1 in the base" : "");
    return report;
  }

  BrittonForm britton_reduce(HnnPresentation const&  pres,
                             std::span<Letter const> letters) {
    BrittonForm form;
    for (Letter l : letters) {
      if (l.gen > pres.stable()) {
        throw ParseError("britton_reduce: letter outside the HNN alphabet");
      }
      if (l.gen != pres.stable()) {
        form.pieces.back() *= Word(l);
        continue;
      }
      if (!form.signs.empty() && form.signs.back() == -l.sign) {
        Word const& g = form.pieces.back();
        // t^-1 g t with g in <u>, or t g t^-1 with g in <v>.
        Word const& edge  = l.sign > 0 ? pres.u() : pres.v();
        Word const& other = l.sign > 0 ? pres.v() : pres.u();
        if (auto p = power_of(g, edge)) {
          form.pieces.pop_back();
          form.signs.pop_back();
          form.pieces.back() *= other.pow(*p);
          continue;
        }
      }
      form.signs.push_back(l.sign);
      form.pieces.emplace_back();
    }
    return form;
  }

  bool hnn_equal(HnnPresentation const& pres, Word const& w1, Word const& w2) {
    std::vector<Letter> letters = w1.letters();
    auto const          inv     = w2.inverse();
    letters.insert(letters.end(), inv.begin(), inv.end());
    auto form = britton_reduce(pres, letters);
    return form.signs.empty() && form.pieces.front().empty();
  }

  ClassificationResult classify_base_conjugacy(HnnPresentation const& pres,
                                               Word const&            alpha,
                                               Word const&            beta) {
    if (!validate_presentation(pres).passed()) {
      throw DomainError("classify_base_conjugacy: presentation fails the "
                        "malnormality / non-conjugacy hypotheses");
    }
    if (alpha.empty() || beta.empty()) {
      throw DomainError("classify_base_conjugacy: alpha and beta must be "
                        "nontrivial");
    }
    if (!pres.is_base_word(alpha) || !pres.is_base_word(beta)) {
      throw DomainError("classify_base_conjugacy: alpha and beta must be "
                        "base words");
    }
    std::size_t const core = std::min(cyclically_reduce(pres.u()).core.size(),
                                      cyclically_reduce(pres.v()).core.size());
    long const bound
        = static_cast<long>(std::max(alpha.size(), beta.size()) / core) + 1;

    ClassificationResult result;
    for (long k = 1; k <= bound; ++k) {
      for (long p : {k, -k}) {
        for (int which : {1, 2}) {
          Word const& from = which == 1 ? pres.u() : pres.v();
          Word const& to   = which == 1 ? pres.v() : pres.u();
          // g (from^p) g^-1 = alpha, h (to^p) h^-1 = beta.
          auto g = is_conjugate(from.pow(p), alpha);
          if (!g) {
            continue;
          }
          auto h = is_conjugate(to.pow(p), beta);
          if (!h) {
            continue;
          }
          result.solvable = true;
          result.which    = which;
          result.p        = p;
          result.gamma    = g->inverse();
          result.delta    = h->inverse();
          result.s = *g * pres.t(which == 1 ? 1 : -1) * h->inverse();
          return result;
        }
      }
    }
    return result;
  }

  Endomorphism dehn_twist(HnnPresentation const& pres, long n) {
    std::vector<Word> images;
    for (std::size_t g = 0; g < pres.full().size(); ++g) {
      images.push_back(gen(g));
    }
    images[pres.stable()] = pres.t() * pres.v().pow(n);
    return Endomorphism(pres, std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Amalgams
  ////////////////////////////////////////////////////////////////////////

  Word AmalgamForm::to_word() const {
    Word result;
    for (auto const& s : syllables) {
      result *= s.word;
    }
    return result;
  }

  namespace {
    // c^k on the given side.
    Word edge_power(AmalgamPresentation const& pres, int factor, long k) {
      return pres.edge(factor).pow(k);
    }

    // (rep, k) with g = rep * c^k and rep the shortlex-least element of g<c>.
    std::pair<Word, long> coset_representative(Word const& g, Word const& c) {
      std::size_t const core = cyclically_reduce(c).core.size();
      long const bound = static_cast<long>(2 * g.size() / core) + 2;
      Word       best  = g;
      long       best_k = 0;
      for (long k = -bound; k <= bound; ++k) {
        Word candidate = g * c.pow(-k);
        if (shortlex_less(candidate, best)) {
          best   = std::move(candidate);
          best_k = k;
        }
      }
      return {best, best_k};
    }
  }  // namespace

  AmalgamForm amalgam_reduce(AmalgamPresentation const& pres,
                             std::span<Syllable const>  input) {
    int previous = -1;
    for (auto const& s : input) {
      if (s.word.empty()) {
        continue;
      }
      if (s.factor != 0 && s.factor != 1) {
        throw ParseError("amalgam syllable with invalid factor");
      }
      for (Letter l : s.word) {
        if (l.gen >= pres.full().size() || pres.factor_of(l) != s.factor) {
          throw ParseError("amalgam syllable mixes factors");
        }
      }
      if (s.factor == previous) {
        throw ParseError("amalgam syllables do not alternate");
      }
      previous = s.factor;
    }

    std::vector<Syllable> stack;
    auto in_edge_group = [&](Syllable const& s) {
      return power_of(s.word, pres.edge(s.factor));
    };
    for (auto const& s : input) {
      if (s.word.empty()) {
        continue;
      }
      Syllable cur = s;
      while (true) {
        if (cur.word.empty()) {
          break;
        }
        if (stack.empty()) {
          stack.push_back(std::move(cur));
          break;
        }
        Syllable& top = stack.back();
        if (top.factor == cur.factor) {
          cur.word = top.word * cur.word;
          stack.pop_back();
          continue;
        }
        if (auto k = in_edge_group(top)) {
          // Only a lone leading syllable can lie in the edge group.
          cur.word = edge_power(pres, cur.factor, *k) * cur.word;
          stack.pop_back();
          continue;
        }
        if (auto k = in_edge_group(cur)) {
          cur = Syllable{top.factor, top.word * edge_power(pres, top.factor, *k)};
          stack.pop_back();
          continue;
        }
        stack.push_back(std::move(cur));
        break;
      }
    }

    // Coset representatives, pushing edge powers rightwards.
    for (std::size_t i = 0; i + 1 < stack.size(); ++i) {
      auto [rep, k] = coset_representative(stack[i].word,
                                           pres.edge(stack[i].factor));
      stack[i].word = std::move(rep);
      stack[i + 1].word
          = edge_power(pres, stack[i + 1].factor, k) * stack[i + 1].word;
    }
    if (stack.size() == 1 && stack[0].factor == 1) {
      if (auto k = in_edge_group(stack[0])) {
        stack[0] = Syllable{0, edge_power(pres, 0, *k)};
      }
    }
    return AmalgamForm{std::move(stack)};
  }

  AmalgamForm amalgam_reduce(AmalgamPresentation const& pres, Word const& w) {
    std::vector<Syllable> syllables;
    for (Letter l : w) {
      if (l.gen >= pres.full().size()) {
        throw ParseError("amalgam_reduce: letter outside the amalgam alphabet");
      }
      int f = pres.factor_of(l);
      if (syllables.empty() || syllables.back().factor != f) {
        syllables.push_back({f, Word()});
      }
      syllables.back().word *= Word(l);
    }
    return amalgam_reduce(pres, std::span<Syllable const>(syllables));
  }

  bool amalgam_equal(AmalgamPresentation const& pres,
                     Word const&                w1,
                     Word const&                w2) {
    return amalgam_reduce(pres, w1 * w2.inverse()).syllables.empty();
  }

  Endomorphism dehn_twist(AmalgamPresentation const& pres, long n) {
    std::vector<Word> images;
    Word const        c = pres.edge(1).pow(n);
    for (std::size_t g = 0; g < pres.full().size(); ++g) {
      if (g < pres.first().size()) {
        images.push_back(gen(g));
      } else {
        images.push_back(c * gen(g) * c.inverse());
      }
    }
    return Endomorphism(pres, std::move(images));
  }

}  // namespace cgt
