// Maps given by generator images, over a free group, an HNN extension or an
// amalgam.

#ifndef CGT_ENDOMORPHISM_HPP_
#define CGT_ENDOMORPHISM_HPP_

#include <vector>

#include "cgt/presentation.hpp"

namespace cgt {

  class Endomorphism {
   public:
    // Images are indexed by generator of alphabet_of(domain) and must be
    // words over that alphabet. Whether the defining relation is preserved
    // is computed once here; see is_homomorphism().
    Endomorphism(Domain domain, std::vector<Word> images);

    static Endomorphism identity(Domain domain);

    Domain const& domain() const noexcept {
      return _domain;
    }
    Alphabet const& alphabet() const {
      return alphabet_of(_domain);
    }
    std::vector<Word> const& images() const noexcept {
      return _images;
    }
    Word const& image(std::size_t g) const {
      return _images.at(g);
    }
    // Always true over a free group; over a splitting, true iff the images
    // satisfy the defining relation.
    bool is_homomorphism() const noexcept {
      return _homomorphism;
    }

    // Same domain, images replaced.
    Endomorphism with_images(std::vector<Word> images) const {
      return Endomorphism(_domain, std::move(images));
    }

   private:
    Domain            _domain;
    std::vector<Word> _images;
    bool              _homomorphism = true;
  };

  // Canonical (free group, amalgam) or Britton-reduced (HNN) form of a word of
  // the domain, flattened back to a word.
  Word normalize(Domain const& domain, std::span<Letter const> letters);

  // Equality of the elements represented by two words of the domain.
  bool equal_in(Domain const& domain, Word const& w1, Word const& w2);

  // Substitutes images and normalizes in the domain.
  Word apply(Endomorphism const& f, Word const& w);

  // (f ∘ g)(x) = f(g(x)).
  Endomorphism compose(Endomorphism const& f, Endomorphism const& g);

  // f^k for k >= 0.
  Endomorphism power(Endomorphism const& f, std::size_t k);

  // True iff f and g agree on every generator, as elements of the domain.
  bool agree_on_generators(Endomorphism const& f, Endomorphism const& g);

}  // namespace cgt

#endif  // CGT_ENDOMORPHISM_HPP_
