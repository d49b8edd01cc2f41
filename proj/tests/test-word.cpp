#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cgt/enumerate.hpp"
#include "support.hpp"

using namespace cgt;
using test::w;

namespace {
  Alphabet const xy   = test::alphabet("x y");
  Alphabet const abuy = test::alphabet("a b u y");
  char const*    v_text = "a y b y a y^-1 b y^-1";

  // Oracle for roots: tries every period dividing the cyclic-core length,
  // comparing the core against repetitions of its prefix.
  std::size_t naive_root_exponent(Word const& w) {
    Word const  core = cyclically_reduce(w).core;
    std::size_t n    = core.size();
    for (std::size_t p = 1; p <= n; ++p) {
      if (n % p != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = p; i < n && periodic; ++i) {
        periodic = core[i] == core[i - p];
      }
      if (periodic) {
        return n / p;
      }
    }
    return 1;
  }
}  // namespace

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({"x", "x"}), ParseError);
  CHECK_THROWS_AS(Alphabet({"x-1"}), ParseError);
  CHECK_THROWS_AS(Alphabet({""}), ParseError);
  Alphabet a({"x", "X", "y_2"});
  CHECK(a.size() == 3);
  CHECK(a.find("X") == 1u);
  CHECK_FALSE(a.find("z"));
}

TEST_CASE("reduce examples") {
  CHECK(w("x x^-1", xy).empty());
  Word v = w(v_text, abuy);
  CHECK(v.size() == 8);
  CHECK(format_word(v, abuy) == v_text);
  CHECK(w("x y y^-1 x", xy) == w("x x", xy));
  CHECK(format_word(w("x y y^-1 x", xy), xy) == "x^2");
}

TEST_CASE("reduce rejects out-of-range letters") {
  std::vector<Letter> bad{Letter{0, 1}, Letter{5, -1}};
  CHECK_THROWS_AS(reduce(bad, xy), ParseError);
  CHECK_THROWS_AS(parse_word("x z", xy), ParseError);
  CHECK_THROWS_AS(parse_word("x^0", xy), ParseError);
  CHECK_THROWS_AS(parse_word("x^a", xy), ParseError);
}

TEST_CASE("reduce agrees with a string oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto letters = test::random_letters(rng, 3, rng() % 65);
    Word r       = Word(letters);
    CHECK(test::to_case_string(r) ==
          test::naive_reduce(test::to_case_string(letters)));
    // idempotent
    CHECK(Word(r.letters()) == r);
  }
}

TEST_CASE("reduce respects concatenation") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    auto l1 = test::random_letters(rng, 3, rng() % 33);
    auto l2 = test::random_letters(rng, 3, rng() % 33);
    std::vector<Letter> cat = l1;
    cat.insert(cat.end(), l2.begin(), l2.end());
    CHECK(Word(cat) == Word(l1) * Word(l2));
  }
}

TEST_CASE("cyclic reduction examples") {
  auto r = cyclically_reduce(w("x y x^-1", xy));
  CHECK(r.core == w("y", xy));
  CHECK(r.conjugator == w("x", xy));
  Word v = w(v_text, abuy);
  // a and y^-1 do not cancel, so v is its own core.
  CHECK_FALSE(v.front().cancels(v.back()));
  r = cyclically_reduce(v);
  CHECK(r.core == v);
  CHECK(r.conjugator.empty());
  r = cyclically_reduce(Word{});
  CHECK(r.core.empty());
  CHECK(r.conjugator.empty());
}

TEST_CASE("cyclic reduction reassembles") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    Word x = test::random_reduced_upto(rng, 3, 20);
    auto r = cyclically_reduce(x);
    CHECK(is_cyclically_reduced(r.core));
    CHECK(r.conjugator * r.core * r.conjugator.inverse() == x);
  }
}

TEST_CASE("least rotation") {
  Word core = w("y x y^-1 x", xy);
  Word lr   = least_rotation(core);
  for (std::size_t i = 0; i < core.size(); ++i) {
    std::vector<Letter> rot(core.begin() + i, core.end());
    rot.insert(rot.end(), core.begin(), core.begin() + i);
    CHECK_FALSE(Word(rot) < lr);
  }
  CHECK(lr == w("x y x y^-1", xy));
}

TEST_CASE("conjugacy examples") {
  auto c = is_conjugate(w("y", xy), w("x y x^-1", xy));
  REQUIRE(c);
  CHECK(*c == w("x", xy));
  CHECK_FALSE(is_conjugate(w("x", xy), w("y", xy)));

  Word v  = w(v_text, abuy);
  Word gv = w("a y^-1 b y^-1 a y b y", abuy);
  c       = is_conjugate(v, gv);
  REQUIRE(c);
  CHECK(*c == w("a y^-1 b y^-1", abuy));
  CHECK(*c * v * c->inverse() == gv);
}

TEST_CASE("conjugacy finds witnesses for random conjugates") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 500; ++i) {
    Word x = test::random_reduced_upto(rng, 3, 16);
    Word g = test::random_reduced_upto(rng, 3, 16);
    Word y = g * x * g.inverse();
    auto c = is_conjugate(x, y);
    REQUIRE(c);
    CHECK(*c * x * c->inverse() == y);
  }
}

TEST_CASE("conjugacy rejects distinct classes") {
  // Conjugacy classes are detected by cyclic normal forms; check both ways.
  auto words = reduced_words(2, 4);
  for (auto const& a : words) {
    for (auto const& b : words) {
      bool same = cyclic_normal_form(a) == cyclic_normal_form(b);
      CHECK(is_conjugate(a, b).has_value() == same);
    }
  }
}

TEST_CASE("root examples") {
  auto r = extract_root(w("x^6", xy));
  CHECK(r.root == w("x", xy));
  CHECK(r.exponent == 6);
  r = extract_root(w("x y x y x y", xy));
  CHECK(r.root == w("x y", xy));
  CHECK(r.exponent == 3);
  Word v = w(v_text, abuy);
  r      = extract_root(v);
  CHECK(r.root == v);
  CHECK(r.exponent == naive_root_exponent(v));
  CHECK(r.exponent == 1);
  CHECK_THROWS_AS(extract_root(Word{}), DomainError);
}

TEST_CASE("root of a conjugated power") {
  Word x = w("y x^3 y^-1", xy);
  auto r = extract_root(x);
  CHECK(r.root == w("y x y^-1", xy));
  CHECK(r.exponent == 3);
}

TEST_CASE("roots of powers multiply exponents") {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 300; ++i) {
    Word x = test::random_reduced(rng, 3, 1 + rng() % 10);
    long k = 1 + static_cast<long>(rng() % 5);
    auto r = extract_root(x);
    auto rk = extract_root(x.pow(k));
    CHECK(rk.root == r.root);
    CHECK(rk.exponent == k * r.exponent);
    CHECK(r.exponent == naive_root_exponent(x));
    CHECK(r.root.pow(static_cast<long>(r.exponent)) == x);
  }
}

TEST_CASE("centralizer examples") {
  CHECK(centralizer(w("x^2", xy)) == w("x", xy));
  CHECK(centralizer(w("x y x^-1", xy)) == w("x y x^-1", xy));
  Word xy4 = w("x y x y x y x y", xy);
  CHECK(centralizer(xy4) == w("x y", xy));
  CHECK_THROWS_AS(centralizer(Word{}), DomainError);
}

TEST_CASE("centralizer of (xy)^4 by brute force") {
  Word g = w("x y", xy);
  Word c = g.pow(4);
  for (auto const& z : reduced_words(2, 4)) {
    bool commutes = (z * c * z.inverse() * c.inverse()).empty();
    bool power    = z.empty() || z == g || z == g.inverse() ||
                 z == g.pow(2) || z == g.pow(-2);
    CHECK(commutes == power);
  }
}

TEST_CASE("centralizer of root-free words is exhaustive at length 6") {
  std::mt19937_64 rng(16);
  auto const      all = reduced_words(2, 6);
  int             tested = 0;
  while (tested < 20) {
    Word x = test::random_reduced(rng, 2, 1 + rng() % 6);
    if (!is_root_free(x)) {
      continue;
    }
    ++tested;
    CHECK(centralizer(x) == x);
    for (auto const& z : all) {
      bool commutes = (z * x * z.inverse() * x.inverse()).empty();
      bool power    = z.empty() || power_of(z, x).has_value();
      CHECK(commutes == power);
    }
  }
}

TEST_CASE("power_of") {
  Word x = w("x y", xy);
  CHECK(power_of(x.pow(-3), x) == -3);
  CHECK(power_of(Word{}, x) == 0);
  CHECK_FALSE(power_of(w("x", xy), x));
  CHECK(power_of(w("x^4", xy), w("x^2", xy)) == 2);
  CHECK_FALSE(power_of(w("x^3", xy), w("x^2", xy)));
}

TEST_CASE("abelianization examples") {
  CHECK(abelianize(w(v_text, abuy), 4) == AbelianVector{2, 2, 0, 0});
  CHECK(abelianize(w("u", abuy), 4) == AbelianVector{0, 0, 1, 0});
  CHECK(abelianize(commutator(w("x", xy), w("y", xy)), 2) ==
        AbelianVector{0, 0});
}

TEST_CASE("abelianization ignores free reduction and is additive") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    auto l1 = test::random_letters(rng, 4, rng() % 20);
    auto l2 = test::random_letters(rng, 4, rng() % 20);
    CHECK(abelianize(Word(l1), 4) == abelianize(l1, 4));
    auto sum = abelianize(l1, 4);
    auto b   = abelianize(l2, 4);
    for (std::size_t g = 0; g < 4; ++g) {
      sum[g] += b[g];
    }
    CHECK(abelianize(Word(l1) * Word(l2), 4) == sum);
  }
}

TEST_CASE("word format round trip") {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 200; ++i) {
    Word x = test::random_reduced_upto(rng, 4, 12);
    CHECK(parse_word(format_word(x, abuy), abuy) == x);
  }
  CHECK(format_word(Word{}, xy) == "1");
  CHECK(parse_word("1", xy).empty());
  CHECK(parse_word("", xy).empty());
}

TEST_CASE("enumeration counts") {
  CHECK(count_reduced_words(2, 0) == 1);
  CHECK(count_reduced_words(2, 3) == 4 * 3 * 3);
  CHECK(reduced_words(2, 3).size() == 1 + 4 + 12 + 36);
  auto words = reduced_words(3, 4);
  for (std::size_t i = 1; i < words.size(); ++i) {
    CHECK(shortlex_less(words[i - 1], words[i]));
  }
}

TEST_CASE("partitioned search merges in first-letter order") {
  auto job = [](Letter first) {
    std::vector<Word> out;
    for_each_reduced_word_starting(2, 3, first,
                                   [&](Word const& x) { out.push_back(x); });
    return out;
  };
  auto one  = partition_by_first_letter<Word>(2, 1, job);
  auto four = partition_by_first_letter<Word>(2, 4, job);
  CHECK(one == four);
  CHECK(one.size() == 4 + 12 + 36);
}
