// Automorphism detection, finite order, bounded fixed subgroups and orbit
// enumeration.

#ifndef CGT_AUTOS_HPP_
#define CGT_AUTOS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgt/endomorphism.hpp"
#include "cgt/stallings.hpp"

namespace cgt {

  // Integer matrix of the induced map on the abelianization; column g is the
  // exponent-sum vector of f(g).
  std::vector<std::vector<long>> abelian_matrix(Endomorphism const& f);

  long determinant(std::vector<std::vector<long>> m);

  // For a map of a free group to itself: true iff the images generate the
  // whole group (free groups are Hopfian, so surjective means bijective).
  bool is_automorphism_free(Endomorphism const& f);

  // True iff f ∘ g and g ∘ f are the identity on every generator. Throws
  // DomainError if either map fails to preserve the defining relation.
  bool verify_automorphism_pair(Endomorphism const& f, Endomorphism const& g);

  // Least k in [1, max_order] with f^k the identity on generators.
  std::optional<std::size_t> order_bounded(Endomorphism const& f,
                                           std::size_t         max_order);

  // Folds every reduced w with |w| <= max_length and f(w) = w: an
  // under-approximation of Fix(f). f must act on a free group.
  SubgroupGraph fixed_words(Endomorphism const& f,
                            std::size_t         max_length,
                            unsigned            workers = 1);

  struct OrbitReport {
    std::string description;
    Word        element;
    std::size_t bound    = 0;
    std::size_t distinct = 0;
    // Smallest (i, j), i < j, in order of j, with f_i(w) = f_j(w).
    std::optional<std::pair<std::size_t, std::size_t>> first_collision;
    std::vector<Word> images;  // normal forms of f_n(w), 0 <= n <= bound
  };

  using MapFamily = std::function<Endomorphism(long)>;

  // Applies f_n to w for 0 <= n <= bound and counts distinct elements,
  // comparing with equality in the family's domain.
  OrbitReport orbit_bounded(MapFamily const&   family,
                            Word const&        w,
                            std::size_t        bound,
                            std::string const& description = "");

}  // namespace cgt

#endif  // CGT_AUTOS_HPP_
