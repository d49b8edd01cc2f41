// Closure procedures at desk scale: centralizer closure of a cyclic subgroup,
// certificate checks for compressed ranks along a cyclic splitting, and the
// full verification pipeline for the free-group example with
// acl(A) = H != A = dcl(A).

#ifndef CGT_CLOSURE_HPP_
#define CGT_CLOSURE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cgt/endomorphism.hpp"
#include "cgt/report.hpp"
#include "cgt/whitehead.hpp"

namespace cgt {

  // Generator of the algebraic (= definable) closure of <w>, which is the
  // centralizer of w. Throws DomainError on the empty word.
  Word abelian_closure(Word const& w);

  struct SplittingCertificate {
    enum class Kind { amalgam, hnn };

    Alphabet          ambient;
    Kind              kind = Kind::amalgam;
    // Amalgam: bases of B1 and B2. HNN: base basis in `first`.
    std::vector<Word> first;
    std::vector<Word> second;
    // Amalgam: c1 in B1 identified with c2 in B2. HNN: u and v with u^t = v.
    Word              edge_first;
    Word              edge_second;
  };

  // Thrown when the edge words do not lie in their factors or a basis is not
  // independent.
  class CertificateError : public Error {
   public:
    using Error::Error;
  };

  // Checks, per condition:
  //   edge_membership   each edge word lies in its factor;
  //   edge_primitive    an edge word is primitive in its own factor (rewritten
  //                     in that factor's basis);
  //   rank_bound        rk(B_i) <= rk(K) for every factor, with
  //                     rk(K) = rk(B1) + rk(B2) - 1 (amalgam) or rk(B) (HNN).
  Report compressed_step_check(SplittingCertificate const& cert,
                               WhiteheadOptions const&     options = {});

  // The HNN presentation F = <H, t | u^t = v>, H = A * <y>,
  // A = <w1..wN, a, b, u>, v = a y b y a y^-1 b y^-1. Generators are ordered
  // w1..wN, a, b, u, y, t. `v_override` replaces v (negative controls).
  HnnPresentation counterexample_presentation(
      std::size_t a0_size, std::optional<Word> v_override = std::nullopt);

  // Indices of a, b, u, y in the presentation's alphabet.
  struct CounterexampleLetters {
    std::size_t a, b, u, y;
  };
  CounterexampleLetters counterexample_letters(std::size_t a0_size);

  // a h b h a h^-1 b h^-1.
  Word counterexample_pattern(CounterexampleLetters const& letters,
                              Word const&                  h);

  // Every reduced h in H with |h| <= max_length whose pattern is conjugate
  // in H to v, in shortlex order.
  std::vector<Word> counterexample_solution_set(HnnPresentation const& pres,
                                                std::size_t a0_size,
                                                std::size_t max_length,
                                                unsigned    workers = 1);
  std::vector<Word> counterexample_solution_set(std::size_t a0_size,
                                                std::size_t max_length,
                                                unsigned    workers = 1);

  struct SeparationResult {
    bool                ok = true;
    std::optional<Word> witness;     // shortlex-least fixed candidate
    std::size_t         candidates = 0;
  };

  // Searches every reduced word of length <= max_length that uses at least
  // one generator outside `fixed_generators` for a fixed point of g. Maps on
  // an HNN extension are restricted to the base, whose images must be base
  // words.
  SeparationResult dcl_separation_check(
      Endomorphism const&          g,
      std::span<std::size_t const> fixed_generators,
      std::size_t                  max_length,
      unsigned                     workers = 1);

  struct CounterexampleBounds {
    std::size_t l_solution   = 6;
    std::size_t l_separation = 8;
  };

  struct CounterexampleReport {
    std::size_t          a0_size = 0;
    std::size_t          rank    = 0;
    CounterexampleBounds bounds;
    // presentation_valid, abelianization_obstruction_ok, g_is_homomorphism,
    // g_is_automorphism, gv_conjugate_to_v, solution_set, dcl_separation_ok.
    Report               report;
    std::optional<Word>  d;             // g(v) = d v d^-1
    std::vector<Word>    solutions;
    std::optional<Endomorphism> g;      // A fixed, y -> y^-1, t -> t d^-1
    std::optional<Endomorphism> g_inverse;

    bool passed() const {
      return report.passed();
    }
  };

  CounterexampleReport verify_counterexample(HnnPresentation const& pres,
                                             std::size_t            a0_size,
                                             CounterexampleBounds   bounds,
                                             unsigned workers = 1);
  CounterexampleReport verify_counterexample(std::size_t          a0_size,
                                             CounterexampleBounds bounds = {},
                                             unsigned workers = 1);

}  // namespace cgt

#endif  // CGT_CLOSURE_HPP_
