#include "cgt/endomorphism.hpp"

#include "cgt/splittings.hpp"

namespace cgt {

  namespace {
    template <class... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    Word substitute(std::vector<Word> const& images, Word const& w) {
      std::vector<Letter> letters;
      for (Letter l : w) {
        Word const& img = images[l.gen];
        if (l.sign > 0) {
          letters.insert(letters.end(), img.begin(), img.end());
        } else {
          auto inv = img.inverse();
          letters.insert(letters.end(), inv.begin(), inv.end());
        }
      }
      return Word(std::span<Letter const>(letters));
    }

    bool preserves_relation(Domain const& domain, std::vector<Word> const& im) {
      return std::visit(
          overloaded{
              [](FreeDomain const&) { return true; },
              [&](HnnPresentation const& p) {
                Word ft = im[p.stable()];
                Word lhs
                    = ft.inverse() * substitute(im, p.u()) * ft;
                return hnn_equal(p, lhs, substitute(im, p.v()));
              },
              [&](AmalgamPresentation const& p) {
                return amalgam_equal(p, substitute(im, p.edge(0)),
                                     substitute(im, p.edge(1)));
              }},
          domain);
    }
  }  // namespace

  Endomorphism::Endomorphism(Domain domain, std::vector<Word> images)
      : _domain(std::move(domain)), _images(std::move(images)) {
    Alphabet const& a = alphabet();
    if (_images.size() != a.size()) {
      throw DomainError("endomorphism needs one image per generator ("
                        + std::to_string(a.size()) + "), got "
                        + std::to_string(_images.size()));
    }
    for (auto& img : _images) {
      img = normalize(_domain, std::span<Letter const>(img.letters()));
    }
    _homomorphism = preserves_relation(_domain, _images);
  }

  Endomorphism Endomorphism::identity(Domain domain) {
    std::vector<Word> images;
    for (std::size_t g = 0; g < alphabet_of(domain).size(); ++g) {
      images.push_back(gen(g));
    }
    return Endomorphism(std::move(domain), std::move(images));
  }

  Word normalize(Domain const& domain, std::span<Letter const> letters) {
    Word w = reduce(letters, alphabet_of(domain));
    return std::visit(
        overloaded{[&](FreeDomain const&) { return w; },
                   [&](HnnPresentation const& p) {
                     return britton_reduce(p, w).to_word(p);
                   },
                   [&](AmalgamPresentation const& p) {
                     return amalgam_reduce(p, w).to_word();
                   }},
        domain);
  }

  bool equal_in(Domain const& domain, Word const& w1, Word const& w2) {
    return std::visit(
        overloaded{[&](FreeDomain const&) { return w1 == w2; },
                   [&](HnnPresentation const& p) {
                     return hnn_equal(p, w1, w2);
                   },
                   [&](AmalgamPresentation const& p) {
                     return amalgam_equal(p, w1, w2);
                   }},
        domain);
  }

  Word apply(Endomorphism const& f, Word const& w) {
    for (Letter l : w) {
      if (l.gen >= f.alphabet().size()) {
        throw DomainError("apply: word is not over the map's alphabet");
      }
    }
    Word image = substitute(f.images(), w);
    return normalize(f.domain(), std::span<Letter const>(image.letters()));
  }

  Endomorphism compose(Endomorphism const& f, Endomorphism const& g) {
    if (!(f.domain() == g.domain())) {
      throw DomainError("compose: maps act on different groups");
    }
    std::vector<Word> images;
    for (auto const& img : g.images()) {
      images.push_back(apply(f, img));
    }
    return f.with_images(std::move(images));
  }

  Endomorphism power(Endomorphism const& f, std::size_t k) {
    Endomorphism result = Endomorphism::identity(f.domain());
    for (std::size_t i = 0; i < k; ++i) {
      result = compose(f, result);
    }
    return result;
  }

  bool agree_on_generators(Endomorphism const& f, Endomorphism const& g) {
    if (!(f.domain() == g.domain())) {
      return false;
    }
    for (std::size_t i = 0; i < f.images().size(); ++i) {
      if (!equal_in(f.domain(), f.image(i), g.image(i))) {
        return false;
      }
    }
    return true;
  }

}  // namespace cgt
