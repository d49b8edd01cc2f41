#include "cgt/autos.hpp"

#include <cstdlib>

#include "cgt/enumerate.hpp"

namespace cgt {

  std::vector<std::vector<long>> abelian_matrix(Endomorphism const& f) {
    std::size_t const n = f.alphabet().size();
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (std::size_t col = 0; col < n; ++col) {
      auto ab = abelianize(f.image(col), n);
      for (std::size_t row = 0; row < n; ++row) {
        m[row][col] = ab[row];
      }
    }
    return m;
  }

  // Bareiss fraction-free elimination.
  long determinant(std::vector<std::vector<long>> m) {
    std::size_t const n = m.size();
    if (n == 0) {
      return 1;
    }
    long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        std::size_t swap = k + 1;
        while (swap < n && m[swap][k] == 0) {
          ++swap;
        }
        if (swap == n) {
          return 0;
        }
        std::swap(m[k], m[swap]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
      }
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  }

  bool is_automorphism_free(Endomorphism const& f) {
    if (!std::holds_alternative<FreeDomain>(f.domain())) {
      throw DomainError("is_automorphism_free: map is not on a free group");
    }
    if (std::labs(determinant(abelian_matrix(f))) != 1) {
      return false;
    }
    return is_whole_group(
        build_subgroup_graph(f.images(), f.alphabet().size()));
  }

  bool verify_automorphism_pair(Endomorphism const& f, Endomorphism const& g) {
    if (!f.is_homomorphism() || !g.is_homomorphism()) {
      throw DomainError("verify_automorphism_pair: map does not preserve the "
                        "defining relation");
    }
    auto const id = Endomorphism::identity(f.domain());
    return agree_on_generators(compose(f, g), id)
           && agree_on_generators(compose(g, f), id);
  }

  std::optional<std::size_t> order_bounded(Endomorphism const& f,
                                           std::size_t         max_order) {
    auto const   id = Endomorphism::identity(f.domain());
    Endomorphism p  = f;
    for (std::size_t k = 1; k <= max_order; ++k) {
      if (agree_on_generators(p, id)) {
        return k;
      }
      p = compose(f, p);
    }
    return std::nullopt;
  }

  SubgroupGraph fixed_words(Endomorphism const& f,
                            std::size_t         max_length,
                            unsigned            workers) {
    if (!std::holds_alternative<FreeDomain>(f.domain())) {
      throw DomainError("fixed_words: map is not on a free group");
    }
    std::size_t const rank  = f.alphabet().size();
    auto              fixed = partition_by_first_letter<Word>(
        rank, workers, [&](Letter first) {
          std::vector<Word> found;
          for_each_reduced_word_starting(rank, max_length, first,
                                         [&](Word const& w) {
                                           if (apply(f, w) == w) {
                                             found.push_back(w);
                                           }
                                         });
          return found;
        });
    return build_subgroup_graph(fixed, rank);
  }

  OrbitReport orbit_bounded(MapFamily const&   family,
                            Word const&        w,
                            std::size_t        bound,
                            std::string const& description) {
    OrbitReport report;
    report.description = description;
    report.element     = w;
    report.bound       = bound;
    std::vector<std::size_t> representatives;  // indices of distinct images
    for (std::size_t n = 0; n <= bound; ++n) {
      Endomorphism f = family(static_cast<long>(n));
      if (!f.is_homomorphism()) {
        throw DomainError("orbit_bounded: family member " + std::to_string(n)
                          + " is not a homomorphism");
      }
      report.images.push_back(apply(f, w));
      bool fresh = true;
      for (std::size_t i : representatives) {
        if (equal_in(f.domain(), report.images[i], report.images[n])) {
          fresh = false;
          if (!report.first_collision) {
            report.first_collision = std::make_pair(i, n);
          }
          break;
        }
      }
      if (fresh) {
        representatives.push_back(n);
      }
    }
    report.distinct = representatives.size();
    return report;
  }

}  // namespace cgt
