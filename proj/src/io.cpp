#include "cgt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cgt {

  namespace {
    std::vector<std::string> split_ws(std::string_view text) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(text)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    std::string_view trim(std::string_view s) {
      auto const ws = " \t\r\n";
      auto       lo = s.find_first_not_of(ws);
      if (lo == std::string_view::npos) {
        return {};
      }
      auto hi = s.find_last_not_of(ws);
      return s.substr(lo, hi - lo + 1);
    }

    // Non-empty, comment-stripped lines.
    std::vector<std::string> lines_of(std::string_view text) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(text)};
      std::string              line;
      while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
          line.erase(hash);
        }
        auto t = trim(line);
        if (!t.empty()) {
          out.emplace_back(t);
        }
      }
      return out;
    }

    // Splits "keyword rest" at the first whitespace.
    std::pair<std::string, std::string> head(std::string const& line) {
      auto sp = line.find_first_of(" \t");
      if (sp == std::string::npos) {
        return {line, ""};
      }
      return {line.substr(0, sp), std::string(trim(line.substr(sp)))};
    }

    long parse_int(std::string_view s, std::string_view context) {
      long value = 0;
      auto const* end = s.data() + s.size();
      auto [ptr, ec]  = std::from_chars(s.data(), end, value);
      if (ec != std::errc() || ptr != end) {
        throw ParseError("malformed integer '" + std::string(s) + "' in '"
                         + std::string(context) + "'");
      }
      return value;
    }

    std::pair<std::string, std::string> split_once(std::string_view text,
                                                   std::string_view sep,
                                                   std::string_view what) {
      auto pos = text.find(sep);
      if (pos == std::string_view::npos) {
        throw ParseError("expected '" + std::string(sep) + "' in " +
                         std::string(what) + ": '" + std::string(text) + "'");
      }
      return {std::string(trim(text.substr(0, pos))),
              std::string(trim(text.substr(pos + sep.size())))};
    }
  }  // namespace

  Alphabet parse_alphabet(std::string_view text) {
    auto names = split_ws(text);
    if (names.empty()) {
      throw ParseError("empty generator list");
    }
    return Alphabet(std::move(names));
  }

  std::vector<Letter> parse_letters(std::string_view text,
                                    Alphabet const&  alphabet) {
    std::vector<Letter> letters;
    auto const          tokens = split_ws(text);
    if (tokens.size() == 1 && tokens[0] == "1" && !alphabet.find("1")) {
      return letters;
    }
    for (auto const& tok : tokens) {
      auto        caret = tok.find('^');
      std::string name  = tok.substr(0, caret);
      long        k     = 1;
      if (caret != std::string::npos) {
        k = parse_int(std::string_view(tok).substr(caret + 1), tok);
        if (k == 0) {
          throw ParseError("zero exponent in '" + tok + "'");
        }
      }
      auto g = alphabet.find(name);
      if (!g) {
        throw ParseError("unknown generator '" + name + "'");
      }
      Letter l{static_cast<std::uint32_t>(*g),
               static_cast<std::int8_t>(k < 0 ? -1 : 1)};
      for (long i = 0; i < std::labs(k); ++i) {
        letters.push_back(l);
      }
    }
    return letters;
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    auto letters = parse_letters(text, alphabet);
    return reduce(letters, alphabet);
  }

  std::vector<Word> parse_word_list(std::string_view text,
                                    Alphabet const&  alphabet) {
    std::vector<Word> out;
    if (trim(text).empty()) {
      return out;
    }
    std::size_t start = 0;
    while (true) {
      auto comma = text.find(',', start);
      auto piece = text.substr(start, comma == std::string_view::npos
                                          ? std::string_view::npos
                                          : comma - start);
      out.push_back(parse_word(piece, alphabet));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    return out;
  }

  std::string format_word(Word const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::ostringstream out;
    std::size_t        i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      long k = static_cast<long>(j - i) * w[i].sign;
      if (i > 0) {
        out << ' ';
      }
      out << alphabet.name(w[i].gen);
      if (k != 1) {
        out << '^' << k;
      }
      i = j;
    }
    return out.str();
  }

  std::string format_word_list(std::vector<Word> const& words,
                               Alphabet const&          alphabet) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      out += (i ? ", " : "") + format_word(words[i], alphabet);
    }
    return out;
  }

  Domain parse_presentation(std::string_view text) {
    std::vector<Alphabet> gens;
    std::optional<Domain> result;
    for (auto const& line : lines_of(text)) {
      auto [key, rest] = head(line);
      if (key == "gens") {
        gens.push_back(parse_alphabet(rest));
      } else if (key == "hnn") {
        if (gens.size() != 1 || result) {
          throw ParseError("'hnn' needs exactly one preceding 'gens' line");
        }
        auto [stable, relation] = split_once(rest, ":", "hnn line");
        auto [lhs, rhs]         = split_once(relation, "->", "hnn relation");
        if (!is_valid_generator_name(stable) || gens[0].find(stable)) {
          throw ParseError("invalid stable letter '" + stable + "'");
        }
        result = HnnPresentation(gens[0], stable, parse_word(lhs, gens[0]),
                                 parse_word(rhs, gens[0]));
      } else if (key == "amalgam") {
        if (gens.size() != 2 || result) {
          throw ParseError("'amalgam' needs exactly two preceding 'gens' "
                           "lines");
        }
        auto [colon, relation] = split_once(rest, ":", "amalgam line");
        if (!colon.empty()) {
          throw ParseError("unexpected text before ':' in amalgam line");
        }
        auto [lhs, rhs] = split_once(relation, "=", "amalgam relation");
        Alphabet full   = gens[0].extended(gens[1].names());
        result = AmalgamPresentation(gens[0], gens[1], parse_word(lhs, full),
                                     parse_word(rhs, full));
      } else if (key == "map") {
        continue;
      } else {
        throw ParseError("unknown presentation line '" + line + "'");
      }
    }
    if (result) {
      return *result;
    }
    if (gens.size() != 1) {
      throw ParseError("presentation needs one 'gens' line (free group), or "
                       "an 'hnn'/'amalgam' line");
    }
    return FreeDomain{gens[0]};
  }

  GraphFile parse_graph(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::vector<GraphEdge>  edges;
    std::size_t             vertices = 1;
    for (auto const& line : lines_of(text)) {
      auto [key, rest] = head(line);
      if (key == "gens") {
        alphabet = parse_alphabet(rest);
        continue;
      }
      if (!alphabet) {
        throw ParseError("graph file must start with a 'gens' line");
      }
      auto tok = split_ws(line);
      if (tok.size() != 3) {
        throw ParseError("graph edge must be 'src label dst': '" + line + "'");
      }
      auto g = alphabet->find(tok[1]);
      if (!g) {
        throw ParseError("unknown edge label '" + tok[1] + "'");
      }
      long src = parse_int(tok[0], line), dst = parse_int(tok[2], line);
      if (src < 0 || dst < 0) {
        throw ParseError("negative vertex in '" + line + "'");
      }
      edges.push_back({static_cast<std::size_t>(src),
                       static_cast<std::uint32_t>(*g),
                       static_cast<std::size_t>(dst)});
      vertices = std::max<std::size_t>(
          vertices, static_cast<std::size_t>(std::max(src, dst)) + 1);
    }
    if (!alphabet) {
      throw ParseError("graph file has no 'gens' line");
    }
    return {*alphabet, SubgroupGraph::from_edges(alphabet->size(), vertices,
                                                 edges, 0)};
  }

  std::string format_graph(SubgroupGraph const& graph,
                           Alphabet const&      alphabet) {
    std::ostringstream out;
    out << "gens";
    for (auto const& n : alphabet.names()) {
      out << ' ' << n;
    }
    out << '\n';
    for (auto const& e : graph.edges()) {
      out << e.src << ' ' << alphabet.name(e.gen) << ' ' << e.dst << '\n';
    }
    return out.str();
  }

  Endomorphism parse_map(std::string_view text, Domain const& domain) {
    Alphabet const&   alphabet = alphabet_of(domain);
    std::vector<Word> images;
    for (std::size_t g = 0; g < alphabet.size(); ++g) {
      images.push_back(gen(g));
    }
    std::vector<bool> seen(alphabet.size(), false);
    for (auto const& line : lines_of(text)) {
      auto [key, rest] = head(line);
      if (key != "map") {
        continue;
      }
      auto [lhs, rhs] = split_once(rest, "->", "map line");
      auto g          = alphabet.find(lhs);
      if (!g) {
        throw ParseError("map for unknown generator '" + lhs + "'");
      }
      if (seen[*g]) {
        throw ParseError("generator '" + lhs + "' mapped twice");
      }
      seen[*g]   = true;
      images[*g] = parse_word(rhs, alphabet);
    }
    return Endomorphism(domain, std::move(images));
  }

  std::string format_map(Endomorphism const& f) {
    std::ostringstream out;
    for (std::size_t g = 0; g < f.images().size(); ++g) {
      out << "map " << f.alphabet().name(g) << " -> "
          << format_word(f.image(g), f.alphabet()) << '\n';
    }
    return out.str();
  }

  SplittingCertificate parse_certificate(std::string_view text) {
    SplittingCertificate    cert;
    std::optional<Alphabet> alphabet;
    bool                    have_kind = false, have_edge = false;
    for (auto const& line : lines_of(text)) {
      auto [key, rest] = head(line);
      if (key == "gens") {
        alphabet = parse_alphabet(rest);
        continue;
      }
      if (!alphabet) {
        throw ParseError("certificate must start with a 'gens' line");
      }
      if (key == "kind") {
        if (rest == "amalgam") {
          cert.kind = SplittingCertificate::Kind::amalgam;
        } else if (rest == "hnn") {
          cert.kind = SplittingCertificate::Kind::hnn;
        } else {
          throw ParseError("certificate kind must be 'amalgam' or 'hnn'");
        }
        have_kind = true;
      } else if (key == "b1" || key == "base") {
        cert.first = parse_word_list(rest, *alphabet);
      } else if (key == "b2") {
        cert.second = parse_word_list(rest, *alphabet);
      } else if (key == "edge") {
        auto [lhs, rhs]  = split_once(rest, "=", "edge line");
        cert.edge_first  = parse_word(lhs, *alphabet);
        cert.edge_second = parse_word(rhs, *alphabet);
        have_edge        = true;
      } else {
        throw ParseError("unknown certificate line '" + line + "'");
      }
    }
    if (!alphabet || !have_kind || !have_edge) {
      throw ParseError("certificate needs 'gens', 'kind' and 'edge' lines");
    }
    cert.ambient = *alphabet;
    return cert;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

}  // namespace cgt
