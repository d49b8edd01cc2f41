#include "cgt/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cgt/autos.hpp"
#include "cgt/closure.hpp"
#include "cgt/enumerate.hpp"
#include "cgt/io.hpp"
#include "cgt/splittings.hpp"
#include "cgt/stallings.hpp"
#include "cgt/whitehead.hpp"

namespace cgt::cli {

  namespace {
    class UsageError : public Error {
     public:
      using Error::Error;
    };

    struct Options {
      std::string              gens;
      std::string              pres;
      std::vector<std::string> graphs;
      std::vector<std::string> subgroups;
      std::vector<std::string> maps;
      std::string              inverse;
      std::string              cert;
      std::string              format  = "text";
      unsigned                 workers = 1;
      std::vector<std::string> words;
      long                     power        = 1;
      std::size_t              bound        = 100;
      std::size_t              max_length   = 6;
      std::size_t              max_order    = 100;
      std::size_t              cap          = 1'000'000;
      std::size_t              a0           = 0;
      std::size_t              l_solution   = 6;
      std::size_t              l_separation = 8;
      bool                     cyclic       = false;
      std::string              family       = "twist";
    };

    // key: value lines, or tab-separated rows with --format tsv.
    class Output {
     public:
      Output(std::ostream& out, bool tsv) : _out(out), _tsv(tsv) {}

      void value(std::string const& key, std::string const& value) {
        _out << key << (_tsv ? "\t" : ": ") << value << '\n';
      }
      void raw(std::string const& text) {
        _out << text;
        if (!text.empty() && text.back() != '\n') {
          _out << '\n';
        }
      }
      void check(Check const& c) {
        std::string status = c.passed ? "PASS" : "FAIL";
        if (_tsv) {
          _out << c.name << '\t' << status << '\t' << c.detail << '\n';
        } else {
          _out << c.name << ": " << status
               << (c.detail.empty() ? "" : " " + c.detail) << '\n';
        }
      }
      int verdict(bool v) {
        _out << (v ? "true" : "false") << '\n';
        return v ? 0 : 1;
      }
      int verdict(Verdict v) {
        _out << to_string(v) << '\n';
        return v == Verdict::yes ? 0 : 1;
      }
      int report(Report const& r) {
        for (auto const& c : r.checks) {
          check(c);
        }
        return r.passed() ? 0 : 1;
      }

     private:
      std::ostream& _out;
      bool          _tsv;
    };

    ////////////////////////////////////////////////////////////////////////
    // Input resolution
    ////////////////////////////////////////////////////////////////////////

    std::optional<Domain> presentation(Options const& o) {
      if (!o.pres.empty()) {
        return parse_presentation(read_file(o.pres));
      }
      return std::nullopt;
    }

    // Domain for maps and words: --pres, then --gens, then a presentation
    // carried inside the first map file.
    Domain domain(Options const& o) {
      if (auto d = presentation(o)) {
        return *d;
      }
      if (!o.gens.empty()) {
        return FreeDomain{parse_alphabet(o.gens)};
      }
      if (!o.maps.empty()) {
        auto text = read_file(o.maps.front());
        if (text.find("gens") != std::string::npos) {
          return parse_presentation(text);
        }
      }
      throw UsageError("no alphabet: give --gens or --pres");
    }

    Alphabet alphabet(Options const& o) {
      return alphabet_of(domain(o));
    }

    HnnPresentation hnn(Options const& o) {
      auto d = presentation(o);
      if (!d || !std::holds_alternative<HnnPresentation>(*d)) {
        throw UsageError("this subcommand needs --pres with an hnn line");
      }
      return std::get<HnnPresentation>(*d);
    }

    std::string const& word_arg(Options const& o, std::size_t i) {
      if (i >= o.words.size()) {
        throw UsageError("missing word argument " + std::to_string(i + 1));
      }
      return o.words[i];
    }

    struct Subgroup {
      Alphabet      alphabet;
      SubgroupGraph graph;
    };

    // Subgroups from --graph files, then --subgroup word lists.
    std::vector<Subgroup> subgroups(Options const& o) {
      std::vector<Subgroup> out;
      for (auto const& path : o.graphs) {
        auto g = parse_graph(read_file(path));
        out.push_back({g.alphabet, g.graph});
      }
      if (!o.subgroups.empty()) {
        Alphabet a = alphabet(o);
        for (auto const& list : o.subgroups) {
          out.push_back({a, build_subgroup_graph(parse_word_list(list, a),
                                                 a.size())});
        }
      }
      return out;
    }

    Subgroup one_subgroup(Options const& o) {
      auto s = subgroups(o);
      if (s.size() != 1) {
        throw UsageError("expected one subgroup (--graph FILE or "
                         "--subgroup \"w1, w2\")");
      }
      return s.front();
    }

    Endomorphism map_arg(Options const& o, std::size_t i, Domain const& d) {
      if (i >= o.maps.size()) {
        throw UsageError("missing --map " + std::to_string(i + 1));
      }
      return parse_map(read_file(o.maps[i]), d);
    }

    std::string fmt(Word const& w, Alphabet const& a) {
      return format_word(w, a);
    }

    void print_basis(Output& out, SubgroupGraph const& g, Alphabet const& a) {
      auto b = basis(g);
      out.value("rank", std::to_string(b.rank));
      out.value("basis", b.basis.empty() ? "1" : format_word_list(b.basis, a));
    }

    void print_trace(Output& out, MinimizationTrace const& t, Alphabet const& a) {
      out.value("initial", format_word_list(t.initial, a));
      for (std::size_t i = 0; i < t.moves.size(); ++i) {
        out.value("move " + std::to_string(i + 1), t.moves[i].describe(a));
      }
      out.value("final", format_word_list(t.final, a));
      out.value("length", std::to_string(total_length(t.initial)) + " -> "
                              + std::to_string(total_length(t.final)));
    }

    void print_whitehead(Output& out, WhiteheadResult const& r,
                         Alphabet const& a) {
      out.value("visited", std::to_string(r.visited));
      out.value("cap_reached", r.cap_reached ? "true" : "false");
      out.value("minimized", format_word_list(r.trace.final, a));
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    using Action = std::function<int(Options const&, Output&)>;
    using Setup  = std::function<void(CLI::App&, Options&)>;

    struct Entry {
      SubcommandInfo info;
      Setup          setup;
      Action         action;
    };

    void words_opt(CLI::App& app, Options& o, std::string const& what) {
      app.add_option("words", o.words, what);
    }
    void gens_opt(CLI::App& app, Options& o) {
      app.add_option("--gens", o.gens, "generator names, e.g. \"x y\"");
    }
    void pres_opt(CLI::App& app, Options& o) {
      app.add_option("--pres", o.pres, "presentation file");
    }
    void alphabet_opts(CLI::App& app, Options& o) {
      gens_opt(app, o);
      pres_opt(app, o);
    }
    void subgroup_opts(CLI::App& app, Options& o) {
      alphabet_opts(app, o);
      app.add_option("--graph", o.graphs, "subgroup graph file (edge list)")
          ->allow_extra_args(false);
      app.add_option("--subgroup", o.subgroups,
                     "comma-separated generating words")
          ->allow_extra_args(false);
    }
    void map_opts(CLI::App& app, Options& o) {
      alphabet_opts(app, o);
      app.add_option("--map", o.maps, "map file with `map x -> ...` lines")
          ->allow_extra_args(false);
    }
    void cap_opt(CLI::App& app, Options& o) {
      app.add_option("--cap", o.cap, "visited-set cap for the orbit search")
          ->check(CLI::PositiveNumber);
    }

    std::vector<Entry> const& table() {
      static std::vector<Entry> const entries = [] {
        std::vector<Entry> e;

        e.push_back({{"reduce", "reduce", "freely reduce a word"},
                     [](CLI::App& app, Options& o) {
                       alphabet_opts(app, o);
                       words_opt(app, o, "word");
                     },
                     [](Options const& o, Output& out) {
                       Alphabet a = alphabet(o);
                       out.raw(fmt(parse_word(word_arg(o, 0), a), a));
                       return 0;
                     }});

        e.push_back({{"conjugate", "is_conjugate",
                      "conjugacy test with witness g, g w1 g^-1 = w2"},
                     [](CLI::App& app, Options& o) {
                       alphabet_opts(app, o);
                       words_opt(app, o, "w1 w2");
                     },
                     [](Options const& o, Output& out) {
                       Alphabet a = alphabet(o);
                       auto c = is_conjugate(parse_word(word_arg(o, 0), a),
                                             parse_word(word_arg(o, 1), a));
                       int rc = out.verdict(c.has_value());
                       if (c) {
                         out.value("witness", fmt(*c, a));
                       }
                       return rc;
                     }});

        e.push_back({{"root", "extract_root", "maximal root of a word"},
                     [](CLI::App& app, Options& o) {
                       alphabet_opts(app, o);
                       words_opt(app, o, "word");
                     },
                     [](Options const& o, Output& out) {
                       Alphabet a = alphabet(o);
                       auto r = extract_root(parse_word(word_arg(o, 0), a));
                       out.value("root", fmt(r.root, a));
                       out.value("exponent", std::to_string(r.exponent));
                       return 0;
                     }});

        e.push_back({{"centralizer", "centralizer",
                      "generator of the centralizer"},
                     [](CLI::App& app, Options& o) {
                       alphabet_opts(app, o);
                       words_opt(app, o, "word");
                     },
                     [](Options const& o, Output& out) {
                       Alphabet a = alphabet(o);
                       out.value("centralizer",
                                 fmt(centralizer(parse_word(word_arg(o, 0), a)),
                                     a));
                       return 0;
                     }});

        e.push_back({{"abelianize", "abelianize", "exponent-sum vector"},
                     [](CLI::App& app, Options& o) {
                       alphabet_opts(app, o);
                       words_opt(app, o, "word");
                     },
                     [](Options const& o, Output& out) {
                       Alphabet a = alphabet(o);
                       auto v = abelianize(parse_letters(word_arg(o, 0), a),
                                           a.size());
                       for (std::size_t g = 0; g < a.size(); ++g) {
                         out.value(a.name(g), std::to_string(v[g]));
                       }
                       return 0;
                     }});

        e.push_back({{"fold", "build_subgroup_graph",
                      "Stallings graph of a subgroup, as an edge list"},
                     subgroup_opts,
                     [](Options const& o, Output& out) {
                       auto s = one_subgroup(o);
                       out.raw(format_graph(s.graph, s.alphabet));
                       return 0;
                     }});

        e.push_back({{"member", "contains", "subgroup membership"},
                     [](CLI::App& app, Options& o) {
                       subgroup_opts(app, o);
                       words_opt(app, o, "word");
                     },
                     [](Options const& o, Output& out) {
                       auto s = one_subgroup(o);
                       return out.verdict(contains(
                           s.graph, parse_word(word_arg(o, 0), s.alphabet)));
                     }});

        e.push_back({{"rank", "basis", "rank and free basis of a subgroup"},
                     subgroup_opts,
                     [](Options const& o, Output& out) {
                       auto s = one_subgroup(o);
                       print_basis(out, s.graph, s.alphabet);
                       return 0;
                     }});

        e.push_back({{"intersect", "intersect",
                      "intersection of two subgroups"},
                     subgroup_opts,
                     [](Options const& o, Output& out) {
                       auto s = subgroups(o);
                       if (s.size() != 2) {
                         throw UsageError("intersect needs two subgroups");
                       }
                       if (!(s[0].alphabet == s[1].alphabet)) {
                         throw UsageError("subgroups use different alphabets");
                       }
                       print_basis(out, intersect(s[0].graph, s[1].graph),
                                   s[0].alphabet);
                       return 0;
                     }});

        e.push_back({{"malnormal", "is_malnormal", "malnormality of a subgroup"},
                     subgroup_opts,
                     [](Options const& o, Output& out) {
                       return out.verdict(is_malnormal(one_subgroup(o).graph));
                     }});

        e.push_back({{"is-primitive", "is_primitive",
                      "is the word part of a basis"},
                     [](CLI::App& app, Options& o) {
                       alphabet_opts(app, o);
                       cap_opt(app, o);
                       words_opt(app, o, "word");
                     },
                     [](Options const& o, Output& out) {
                       Alphabet a = alphabet(o);
                       auto r = is_primitive(parse_word(word_arg(o, 0), a), a,
                                             {o.cap});
                       int rc = out.verdict(r.verdict);
                       print_whitehead(out, r, a);
                       return rc;
                     }});

        e.push_back({{"is-free-factor", "is_free_factor",
                      "is the subgroup with this basis a free factor"},
                     [](CLI::App& app, Options& o) {
                       alphabet_opts(app, o);
                       cap_opt(app, o);
                       words_opt(app, o, "comma-separated basis");
                     },
                     [](Options const& o, Output& out) {
                       Alphabet a = alphabet(o);
                       auto b = parse_word_list(word_arg(o, 0), a);
                       auto r = is_free_factor(b, a, {o.cap});
                       int rc = out.verdict(r.verdict);
                       print_whitehead(out, r, a);
                       return rc;
                     }});

        e.push_back({{"whitehead-min", "minimize_tuple",
                      "greedy Whitehead minimization trace"},
                     [](CLI::App& app, Options& o) {
                       alphabet_opts(app, o);
                       app.add_flag("--cyclic", o.cyclic,
                                    "minimize cyclic lengths");
                       words_opt(app, o, "comma-separated words");
                     },
                     [](Options const& o, Output& out) {
                       Alphabet a = alphabet(o);
                       auto t = minimize_tuple(parse_word_list(word_arg(o, 0), a),
                                               a, o.cyclic);
                       print_trace(out, t, a);
                       return 0;
                     }});

        e.push_back({{"britton", "britton_reduce",
                      "pinch-free form in an HNN extension"},
                     [](CLI::App& app, Options& o) {
                       pres_opt(app, o);
                       words_opt(app, o, "word");
                     },
                     [](Options const& o, Output& out) {
                       auto p = hnn(o);
                       auto f = britton_reduce(
                           p, parse_letters(word_arg(o, 0), p.full()));
                       out.value("form", fmt(f.to_word(p), p.full()));
                       out.value("hnn_length", std::to_string(hnn_length(f)));
                       return 0;
                     }});

        e.push_back({{"hnn-equal", "hnn_equal",
                      "equality in an HNN extension"},
                     [](CLI::App& app, Options& o) {
                       pres_opt(app, o);
                       words_opt(app, o, "w1 w2");
                     },
                     [](Options const& o, Output& out) {
                       auto p = hnn(o);
                       return out.verdict(
                           hnn_equal(p, parse_word(word_arg(o, 0), p.full()),
                                     parse_word(word_arg(o, 1), p.full())));
                     }});

        e.push_back({{"classify", "classify_base_conjugacy",
                      "solve alpha^s = beta with s outside the base"},
                     [](CLI::App& app, Options& o) {
                       pres_opt(app, o);
                       words_opt(app, o, "alpha beta");
                     },
                     [](Options const& o, Output& out) {
                       auto p = hnn(o);
                       auto r = classify_base_conjugacy(
                           p, parse_word(word_arg(o, 0), p.full()),
                           parse_word(word_arg(o, 1), p.full()));
                       out.value("solvable", r.solvable ? "true" : "false");
                       if (r.solvable) {
                         out.value("case", std::to_string(r.which));
                         out.value("p", std::to_string(r.p));
                         out.value("gamma", fmt(r.gamma, p.full()));
                         out.value("delta", fmt(r.delta, p.full()));
                         out.value("s", fmt(r.s, p.full()));
                       }
                       return r.solvable ? 0 : 1;
                     }});

        e.push_back({{"dehn-twist", "dehn_twist",
                      "Dehn twist of an HNN or amalgam presentation"},
                     [](CLI::App& app, Options& o) {
                       pres_opt(app, o);
                       app.add_option("--power", o.power, "twist exponent");
                     },
                     [](Options const& o, Output& out) {
                       auto d = presentation(o);
                       if (auto const* h = d ? std::get_if<HnnPresentation>(&*d)
                                             : nullptr) {
                         out.raw(format_map(dehn_twist(*h, o.power)));
                         return 0;
                       }
                       if (auto const* m = d ? std::get_if<AmalgamPresentation>(&*d)
                                             : nullptr) {
                         out.raw(format_map(dehn_twist(*m, o.power)));
                         return 0;
                       }
                       throw UsageError("dehn-twist needs --pres with an hnn "
                                        "or amalgam line");
                     }});

        e.push_back({{"apply", "apply", "image of a word under a map"},
                     [](CLI::App& app, Options& o) {
                       map_opts(app, o);
                       words_opt(app, o, "word");
                     },
                     [](Options const& o, Output& out) {
                       Domain d = domain(o);
                       auto   f = map_arg(o, 0, d);
                       if (!f.is_homomorphism()) {
                         throw DomainError("map does not preserve the relation");
                       }
                       out.raw(fmt(apply(f, parse_word(word_arg(o, 0),
                                                       f.alphabet())),
                                   f.alphabet()));
                       return 0;
                     }});

        e.push_back({{"compose", "compose",
                      "composite of two maps (first after second)"},
                     map_opts,
                     [](Options const& o, Output& out) {
                       Domain d = domain(o);
                       out.raw(format_map(compose(map_arg(o, 0, d),
                                                  map_arg(o, 1, d))));
                       return 0;
                     }});

        e.push_back({{"is-auto", "is_automorphism_free",
                      "automorphism test (free groups) or inverse check"},
                     [](CLI::App& app, Options& o) {
                       map_opts(app, o);
                       app.add_option("--inverse", o.inverse,
                                      "candidate inverse map (splittings)");
                     },
                     [](Options const& o, Output& out) {
                       Domain d = domain(o);
                       auto   f = map_arg(o, 0, d);
                       if (std::holds_alternative<FreeDomain>(d)) {
                         int rc = out.verdict(is_automorphism_free(f));
                         out.value("determinant", std::to_string(determinant(
                                                      abelian_matrix(f))));
                         return rc;
                       }
                       if (o.inverse.empty()) {
                         throw UsageError("maps on a splitting need --inverse");
                       }
                       return out.verdict(verify_automorphism_pair(
                           f, parse_map(read_file(o.inverse), d)));
                     }});

        e.push_back({{"order", "order_bounded", "finite order of a map"},
                     [](CLI::App& app, Options& o) {
                       map_opts(app, o);
                       app.add_option("--max-order", o.max_order,
                                      "largest order tried")
                           ->check(CLI::PositiveNumber);
                     },
                     [](Options const& o, Output& out) {
                       auto k = order_bounded(map_arg(o, 0, domain(o)),
                                              o.max_order);
                       out.value("order",
                                 k ? std::to_string(*k)
                                   : "none up to " + std::to_string(o.max_order));
                       return k ? 0 : 1;
                     }});

        e.push_back({{"fixed", "fixed_words",
                      "subgroup generated by short fixed words"},
                     [](CLI::App& app, Options& o) {
                       map_opts(app, o);
                       app.add_option("--max-length", o.max_length,
                                      "longest word searched");
                     },
                     [](Options const& o, Output& out) {
                       auto f = map_arg(o, 0, domain(o));
                       auto g = fixed_words(f, o.max_length, o.workers);
                       print_basis(out, g, f.alphabet());
                       return 0;
                     }});

        e.push_back({{"orbit", "orbit_bounded",
                      "distinct images f_n(w), 0 <= n <= bound"},
                     [](CLI::App& app, Options& o) {
                       map_opts(app, o);
                       app.add_option("--family", o.family,
                                      "twist (Dehn twists of --pres) or "
                                      "power (powers of --map)")
                           ->check(CLI::IsMember({"twist", "power"}));
                       app.add_option("--bound", o.bound, "largest n");
                       words_opt(app, o, "word");
                     },
                     [](Options const& o, Output& out) {
                       Domain    d = domain(o);
                       MapFamily family;
                       if (o.family == "power") {
                         auto f = map_arg(o, 0, d);
                         family = [f](long n) {
                           return power(f, static_cast<std::size_t>(n));
                         };
                       } else if (auto const* h = std::get_if<HnnPresentation>(&d)) {
                         family = [h = *h](long n) { return dehn_twist(h, n); };
                       } else if (auto const* m = std::get_if<AmalgamPresentation>(&d)) {
                         family = [m = *m](long n) { return dehn_twist(m, n); };
                       } else {
                         throw UsageError("--family twist needs a splitting");
                       }
                       Alphabet const& a = alphabet_of(d);
                       auto r = orbit_bounded(family,
                                              parse_word(word_arg(o, 0), a),
                                              o.bound, o.family);
                       out.value("bound", std::to_string(r.bound));
                       out.value("distinct", std::to_string(r.distinct));
                       out.value("first_collision",
                                 r.first_collision
                                     ? std::to_string(r.first_collision->first)
                                           + " " + std::to_string(
                                                 r.first_collision->second)
                                     : "none");
                       return 0;
                     }});

        e.push_back({{"abelian-acl", "abelian_closure",
                      "closure of a cyclic subgroup"},
                     [](CLI::App& app, Options& o) {
                       alphabet_opts(app, o);
                       words_opt(app, o, "word");
                     },
                     [](Options const& o, Output& out) {
                       Alphabet a = alphabet(o);
                       out.value("acl", fmt(abelian_closure(
                                                parse_word(word_arg(o, 0), a)),
                                            a));
                       return 0;
                     }});

        e.push_back({{"compressed-check", "compressed_step_check",
                      "check a splitting certificate"},
                     [](CLI::App& app, Options& o) {
                       app.add_option("--cert", o.cert, "certificate file")
                           ->required();
                       cap_opt(app, o);
                     },
                     [](Options const& o, Output& out) {
                       return out.report(compressed_step_check(
                           parse_certificate(read_file(o.cert)), {o.cap}));
                     }});

        e.push_back({{"verify-counterexample", "verify_counterexample",
                      "run every check on the acl != dcl example"},
                     [](CLI::App& app, Options& o) {
                       app.add_option("--a0", o.a0, "number of extra letters");
                       app.add_option("--l-solution", o.l_solution,
                                      "length bound for the solution set")
                           ->check(CLI::PositiveNumber);
                       app.add_option("--l-separation", o.l_separation,
                                      "length bound for the fixed-point search")
                           ->check(CLI::PositiveNumber);
                     },
                     [](Options const& o, Output& out) {
                       auto r = verify_counterexample(
                           o.a0, {o.l_solution, o.l_separation}, o.workers);
                       return out.report(r.report);
                     }});
        return e;
      }();
      return entries;
    }
  }  // namespace

  std::vector<SubcommandInfo> const& subcommands() {
    static std::vector<SubcommandInfo> const infos = [] {
      std::vector<SubcommandInfo> out;
      for (auto const& e : table()) {
        out.push_back(e.info);
      }
      return out;
    }();
    return infos;
  }

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Combinatorial group theory toolkit", "cgt"};
    app.require_subcommand(1);
    Options o;
    o.workers = default_workers();
    app.add_option("--format", o.format, "text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
    app.add_option("--workers", o.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    app.fallthrough();

    std::vector<std::pair<CLI::App*, Action const*>> commands;
    for (auto const& e : table()) {
      auto* sub = app.add_subcommand(e.info.name, e.info.summary);
      sub->fallthrough();
      e.setup(*sub, o);
      commands.emplace_back(sub, &e.action);
    }

    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::Success const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }

    Output output(out, o.format == "tsv");
    for (auto const& [sub, action] : commands) {
      if (!sub->parsed()) {
        continue;
      }
      try {
        return (*action)(o, output);
      } catch (Error const& e) {
        err << "error: " << e.what() << '\n';
        return 2;
      }
    }
    return 2;
  }

}  // namespace cgt::cli
