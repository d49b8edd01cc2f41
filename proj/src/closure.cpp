#include "cgt/closure.hpp"

#include <algorithm>
#include <sstream>

#include "cgt/autos.hpp"
#include "cgt/enumerate.hpp"
#include "cgt/io.hpp"
#include "cgt/splittings.hpp"
#include "cgt/stallings.hpp"

namespace cgt {

  Word abelian_closure(Word const& w) {
    if (w.empty()) {
      throw DomainError("abelian_closure: <1> is not a nontrivial abelian "
                        "subgroup");
    }
    return centralizer(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Compressed-rank certificates
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Factor {
      SubgroupGraph graph;
      std::size_t   rank;
    };

    Factor factor_of(std::vector<Word> const& basis_words,
                     std::size_t              ambient_rank,
                     char const*              name) {
      auto graph = build_subgroup_graph(basis_words, ambient_rank);
      auto rank  = basis(graph).rank;
      if (rank != basis_words.size()) {
        throw CertificateError(std::string(name)
                               + " is not given by an independent basis");
      }
      return {std::move(graph), rank};
    }

    Alphabet local_alphabet(std::size_t rank) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < rank; ++i) {
        names.push_back("b" + std::to_string(i));
      }
      return Alphabet(std::move(names));
    }

    // Primitivity of c inside the subgroup described by `f`, after rewriting
    // c in the subgroup's own basis.
    Verdict primitive_in(Factor const& f, Word const& c,
                         WhiteheadOptions const& options) {
      auto local = rewrite_in_basis(f.graph, c);
      if (!local || local->empty()) {
        return Verdict::no;
      }
      return is_primitive(*local, local_alphabet(f.rank), options).verdict;
    }
  }  // namespace

  Report compressed_step_check(SplittingCertificate const& cert,
                               WhiteheadOptions const&     options) {
    std::size_t const n = cert.ambient.size();
    Report            report;
    auto fmt = [&](Word const& w) { return format_word(w, cert.ambient); };

    if (cert.kind == SplittingCertificate::Kind::hnn) {
      auto base = factor_of(cert.first, n, "base");
      for (Word const* c : {&cert.edge_first, &cert.edge_second}) {
        if (c->empty() || !contains(base.graph, *c)) {
          throw CertificateError("edge word " + fmt(*c)
                                 + " does not lie in the base");
        }
      }
      report.add("edge_membership", true);
      auto pu = primitive_in(base, cert.edge_first, options);
      auto pv = pu == Verdict::yes
                    ? Verdict::no
                    : primitive_in(base, cert.edge_second, options);
      bool prim = pu == Verdict::yes || pv == Verdict::yes;
      report.add("edge_primitive", prim,
                 pu == Verdict::yes   ? "u primitive in base"
                 : pv == Verdict::yes ? "v primitive in base"
                                      : "u: " + to_string(pu)
                                            + ", v: " + to_string(pv));
      std::ostringstream detail;
      detail << "rk(B) = " << base.rank << " <= rk(K) = " << base.rank;
      report.add("rank_bound", prim,
                 prim ? detail.str() : "no primitive edge word");
      return report;
    }

    auto b1 = factor_of(cert.first, n, "B1");
    auto b2 = factor_of(cert.second, n, "B2");
    if (cert.edge_first.empty() || !contains(b1.graph, cert.edge_first)) {
      throw CertificateError("edge word " + fmt(cert.edge_first)
                             + " does not lie in B1");
    }
    if (cert.edge_second.empty() || !contains(b2.graph, cert.edge_second)) {
      throw CertificateError("edge word " + fmt(cert.edge_second)
                             + " does not lie in B2");
    }
    report.add("edge_membership", true);
    auto p1   = primitive_in(b1, cert.edge_first, options);
    auto p2   = p1 == Verdict::yes
                    ? Verdict::no
                    : primitive_in(b2, cert.edge_second, options);
    bool prim = p1 == Verdict::yes || p2 == Verdict::yes;
    report.add("edge_primitive", prim,
               p1 == Verdict::yes   ? "primitive in B1"
               : p2 == Verdict::yes ? "primitive in B2"
                                    : "B1: " + to_string(p1)
                                          + ", B2: " + to_string(p2));
    std::size_t const rk_k = b1.rank + b2.rank - 1;
    std::ostringstream detail;
    detail << "rk(B1) = " << b1.rank << ", rk(B2) = " << b2.rank
           << " <= rk(K) = " << rk_k;
    bool bound = prim && b1.rank <= rk_k && b2.rank <= rk_k;
    report.add("rank_bound", bound,
               prim ? detail.str() : "no primitive edge word");
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // The counterexample
  ////////////////////////////////////////////////////////////////////////

  CounterexampleLetters counterexample_letters(std::size_t a0_size) {
    return {a0_size, a0_size + 1, a0_size + 2, a0_size + 3};
  }

  namespace {
    Alphabet counterexample_base(std::size_t a0_size) {
      std::vector<std::string> names;
      for (std::size_t i = 1; i <= a0_size; ++i) {
        names.push_back("w" + std::to_string(i));
      }
      for (char const* n : {"a", "b", "u", "y"}) {
        names.emplace_back(n);
      }
      return Alphabet(std::move(names));
    }

    std::string tuple_string(AbelianVector const& v) {
      std::ostringstream out;
      out << '(';
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? "," : "") << v[i];
      }
      out << ')';
      return out.str();
    }
  }  // namespace

  Word counterexample_pattern(CounterexampleLetters const& l, Word const& h) {
    Word a = gen(l.a), b = gen(l.b), hi = h.inverse();
    return a * h * b * h * a * hi * b * hi;
  }

  HnnPresentation counterexample_presentation(std::size_t         a0_size,
                                              std::optional<Word> v_override) {
    auto const l = counterexample_letters(a0_size);
    Word       v = v_override ? *v_override
                              : counterexample_pattern(l, gen(l.y));
    return HnnPresentation(counterexample_base(a0_size), "t", gen(l.u), v);
  }

  std::vector<Word> counterexample_solution_set(HnnPresentation const& pres,
                                                std::size_t a0_size,
                                                std::size_t max_length,
                                                unsigned    workers) {
    auto const        l      = counterexample_letters(a0_size);
    std::size_t const rank   = pres.base().size();
    Word const        target = cyclic_normal_form(pres.v());
    auto solutions = partition_by_first_letter<Word>(
        rank, workers, [&](Letter first) {
          std::vector<Word> found;
          for_each_reduced_word_starting(
              rank, max_length, first, [&](Word const& h) {
                auto core = cyclically_reduce(counterexample_pattern(l, h)).core;
                if (core.size() == target.size()
                    && least_rotation(core) == target) {
                  found.push_back(h);
                }
              });
          return found;
        });
    std::sort(solutions.begin(), solutions.end(), shortlex_less);
    return solutions;
  }

  std::vector<Word> counterexample_solution_set(std::size_t a0_size,
                                                std::size_t max_length,
                                                unsigned    workers) {
    return counterexample_solution_set(counterexample_presentation(a0_size),
                                       a0_size, max_length, workers);
  }

  namespace {
    Endomorphism restrict_to_base(Endomorphism const& g) {
      auto const* pres = std::get_if<HnnPresentation>(&g.domain());
      if (pres == nullptr) {
        return g;
      }
      std::vector<Word> images;
      for (std::size_t i = 0; i < pres->base().size(); ++i) {
        if (!pres->is_base_word(g.image(i))) {
          throw DomainError("map does not send the base into itself");
        }
        images.push_back(g.image(i));
      }
      return Endomorphism(FreeDomain{pres->base()}, std::move(images));
    }
  }  // namespace

  SeparationResult dcl_separation_check(
      Endomorphism const&          g,
      std::span<std::size_t const> fixed_generators,
      std::size_t                  max_length,
      unsigned                     workers) {
    auto const        h    = restrict_to_base(g);
    std::size_t const rank = h.alphabet().size();
    std::vector<bool> fixed(rank, false);
    for (std::size_t i : fixed_generators) {
      fixed.at(i) = true;
    }
    struct Hit {
      Word        word;
      bool        fixed_point;
      std::size_t count;
    };
    // One record per first letter: candidate count and first fixed point.
    auto parts = partition_by_first_letter<Hit>(
        rank, workers, [&](Letter first) {
          Hit hit{Word(), false, 0};
          for_each_reduced_word_starting(
              rank, max_length, first, [&](Word const& w) {
                bool candidate = std::any_of(
                    w.begin(), w.end(), [&](Letter l) { return !fixed[l.gen]; });
                if (!candidate) {
                  return;
                }
                ++hit.count;
                if (apply(h, w) == w
                    && (!hit.fixed_point || shortlex_less(w, hit.word))) {
                  hit.word        = w;
                  hit.fixed_point = true;
                }
              });
          return std::vector<Hit>{hit};
        });
    SeparationResult result;
    for (auto const& p : parts) {
      result.candidates += p.count;
      if (p.fixed_point
          && (!result.witness || shortlex_less(p.word, *result.witness))) {
        result.witness = p.word;
      }
    }
    result.ok = !result.witness.has_value();
    return result;
  }

  CounterexampleReport verify_counterexample(HnnPresentation const& pres,
                                             std::size_t            a0_size,
                                             CounterexampleBounds   bounds,
                                             unsigned               workers) {
    if (bounds.l_solution < 1 || bounds.l_separation < 1) {
      throw DomainError("verify_counterexample: bounds must be positive");
    }
    auto const      l    = counterexample_letters(a0_size);
    Alphabet const& base = pres.base();
    auto fmt = [&](Word const& w) { return format_word(w, pres.full()); };

    CounterexampleReport out;
    out.a0_size = a0_size;
    out.bounds  = bounds;
    // u is a basis letter of H not occurring in v, so eliminating it leaves F
    // free on the remaining base letters and t.
    bool const u_eliminable
        = pres.u() == gen(l.u)
          && std::none_of(pres.v().begin(), pres.v().end(),
                          [&](Letter x) { return x.gen == l.u; });
    out.rank = u_eliminable ? base.size() : base.size() + 1;

    // (a) malnormality and non-conjugacy of the edge groups.
    {
      auto        valid = validate_presentation(pres);
      std::string failed;
      for (auto const& c : valid.checks) {
        if (!c.passed) {
          failed += (failed.empty() ? "" : "; ") + c.name + ": " + c.detail;
        }
      }
      out.report.add("presentation_valid", valid.passed(),
                     valid.passed() ? "u, v root-free; u not conjugate to v^{+-1}"
                                    : failed);
    }

    // (b) f(t) in H is impossible: exponent sums of the two sides differ.
    {
      auto av = abelianize(pres.v(), base.size());
      auto au = abelianize(pres.u(), base.size());
      out.report.add("abelianization_obstruction_ok", av != au,
                     "v -> " + tuple_string(av) + ", u -> " + tuple_string(au));
    }

    // g: identity on A, y -> y^-1, t -> t d^-1, where g(v) = d v d^-1.
    std::vector<Word> sigma_images;
    for (std::size_t i = 0; i < base.size(); ++i) {
      sigma_images.push_back(i == l.y ? gen(i, -1) : gen(i));
    }
    Endomorphism const sigma(FreeDomain{base}, sigma_images);
    Word const         gv = apply(sigma, pres.v());
    out.d                 = is_conjugate(pres.v(), gv);

    if (out.d) {
      auto images = sigma_images;
      images.push_back(pres.t() * out.d->inverse());
      out.g = Endomorphism(pres, images);
      // Inverse: identity on A, y -> y^-1, t -> t sigma(d).
      images.back() = pres.t() * apply(sigma, *out.d);
      out.g_inverse = Endomorphism(pres, images);
    }

    // (c) homomorphism and automorphism.
    if (out.g) {
      out.report.add("g_is_homomorphism", out.g->is_homomorphism(),
                     "g(t)^-1 u g(t) = g(v) with g(t) = "
                         + fmt(out.g->image(pres.stable())));
      bool automorphism = out.g->is_homomorphism()
                          && out.g_inverse->is_homomorphism()
                          && verify_automorphism_pair(*out.g, *out.g_inverse);
      out.report.add("g_is_automorphism", automorphism,
                     "inverse: t -> "
                         + fmt(out.g_inverse->image(pres.stable())));
    } else {
      out.report.add("g_is_homomorphism", false,
                     "g(v) = " + fmt(gv) + " is not conjugate to v");
      out.report.add("g_is_automorphism", false, "g undefined");
    }

    // (d) g(v) = d v d^-1.
    out.report.add("gv_conjugate_to_v", out.d.has_value(),
                   out.d ? "d = " + fmt(*out.d)
                         : "g(v) = " + fmt(gv) + " is not conjugate to v");

    // (e) solutions of "a h b h a h^-1 b h^-1 conjugate to v" are y^{+-1}.
    out.solutions = counterexample_solution_set(pres, a0_size,
                                                bounds.l_solution, workers);
    {
      std::vector<Word> expected{gen(l.y), gen(l.y, -1)};
      std::sort(expected.begin(), expected.end(), shortlex_less);
      out.report.add("solution_set", out.solutions == expected,
                     "{" + format_word_list(out.solutions, pres.full())
                         + "} at |h| <= " + std::to_string(bounds.l_solution));
    }

    // (f) g moves every element of H outside A.
    if (out.g) {
      std::vector<std::size_t> a_gens;
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (i != l.y) {
          a_gens.push_back(i);
        }
      }
      auto sep = dcl_separation_check(*out.g, a_gens, bounds.l_separation,
                                      workers);
      out.report.add("dcl_separation_ok", sep.ok,
                     sep.ok ? std::to_string(sep.candidates)
                                  + " candidates, no fixed point, |w| <= "
                                  + std::to_string(bounds.l_separation)
                            : "fixed point " + fmt(*sep.witness));
    } else {
      out.report.add("dcl_separation_ok", false, "g undefined");
    }
    return out;
  }

  CounterexampleReport verify_counterexample(std::size_t          a0_size,
                                             CounterexampleBounds bounds,
                                             unsigned             workers) {
    return verify_counterexample(counterexample_presentation(a0_size), a0_size,
                                 bounds, workers);
  }

}  // namespace cgt
