// Text formats: words, presentation files, graph edge lists, map files and
// splitting certificates.
//
// Words are whitespace-separated tokens `name` or `name^k` (k a nonzero
// integer); `1` or an empty string is the identity. Files are line based;
// `#` starts a comment.

#ifndef CGT_IO_HPP_
#define CGT_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "cgt/closure.hpp"
#include "cgt/endomorphism.hpp"
#include "cgt/presentation.hpp"
#include "cgt/stallings.hpp"

namespace cgt {

  Alphabet parse_alphabet(std::string_view text);

  // Letters as written, not reduced.
  std::vector<Letter> parse_letters(std::string_view text,
                                    Alphabet const&  alphabet);
  Word parse_word(std::string_view text, Alphabet const& alphabet);

  // Comma-separated list of words.
  std::vector<Word> parse_word_list(std::string_view text,
                                    Alphabet const&  alphabet);

  // Runs of a letter are written as powers; the identity is `1`.
  std::string format_word(Word const& w, Alphabet const& alphabet);
  std::string format_word_list(std::vector<Word> const& words,
                               Alphabet const&          alphabet);

  // Presentation file:
  //   gens a b u y
  //   hnn t : u -> a y b y a y^-1 b y^-1
  // or two `gens` lines followed by
  //   amalgam : <word1> = <word2>
  // A single `gens` line alone is a free group. Other lines (e.g. `map`) are
  // ignored so one file can carry a presentation and maps.
  Domain parse_presentation(std::string_view text);

  // Edge list, base vertex 0:
  //   gens x y
  //   0 x 1
  //   1 y 0
  struct GraphFile {
    Alphabet      alphabet;
    SubgroupGraph graph;
  };
  GraphFile   parse_graph(std::string_view text);
  std::string format_graph(SubgroupGraph const& graph,
                           Alphabet const&      alphabet);

  // Lines `map x -> x y`; unlisted generators are fixed. Non-map lines are
  // ignored.
  Endomorphism parse_map(std::string_view text, Domain const& domain);
  std::string  format_map(Endomorphism const& f);

  // Certificate file:
  //   gens x y z
  //   kind amalgam          (or hnn)
  //   b1 x, y               (hnn: base <words>)
  //   b2 z
  //   edge x y x^-1 y^-1 = z
  SplittingCertificate parse_certificate(std::string_view text);

  std::string read_file(std::string const& path);

}  // namespace cgt

#endif  // CGT_IO_HPP_
