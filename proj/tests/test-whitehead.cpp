#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cgt/enumerate.hpp"
#include "cgt/autos.hpp"
#include "cgt/whitehead.hpp"
#include "support.hpp"

using namespace cgt;
using test::w;

namespace {
  Alphabet const x_ = test::alphabet("x");
  Alphabet const xy = test::alphabet("x y");
  Alphabet const xyz = test::alphabet("x y z");

  // First element of a basis obtained from the standard one by random
  // Nielsen moves b_i -> b_i b_j^{+-1} and inversions.
  Word nielsen_primitive(std::mt19937_64& rng, std::size_t rank, int steps) {
    std::vector<Word> b;
    for (std::size_t g = 0; g < rank; ++g) {
      b.push_back(gen(g));
    }
    for (int s = 0; s < steps; ++s) {
      std::size_t i = rng() % rank, j = rng() % rank;
      if (i == j) {
        b[i] = b[i].inverse();
      } else {
        b[i] = (rng() % 2) ? b[i] * b[j] : b[i] * b[j].inverse();
      }
    }
    return b[0];
  }

  std::vector<Word> apply_all(Endomorphism const& f,
                              std::vector<Word> const& ws) {
    std::vector<Word> out;
    for (auto const& x : ws) {
      out.push_back(apply(f, x));
    }
    return out;
  }
}  // namespace

TEST_CASE("move lists") {
  auto one = whitehead_moves(x_);
  CHECK(one.size() == 2);
  for (auto const& m : one) {
    CHECK(m.kind == WhiteheadMove::Kind::permutation);
  }
  CHECK(agree_on_generators(one[0].map, Endomorphism::identity(FreeDomain{x_})));
  CHECK(one[1].map.image(0) == w("x^-1", xy));

  auto two = whitehead_moves(xy);
  bool nielsen = false;
  for (auto const& m : two) {
    nielsen |= m.map.image(0) == w("x y", xy) && m.map.image(1) == w("y", xy);
  }
  CHECK(nielsen);
}

TEST_CASE("type-II move counts") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> names;
    for (std::size_t g = 0; g < n; ++g) {
      names.push_back("g" + std::to_string(g));
    }
    Alphabet a(names);
    // Each of the 2n multipliers pairs with every nonempty subset of the
    // 2n - 2 other letters.
    std::size_t expected = 0;
    for (std::size_t m = 0; m < 2 * n; ++m) {
      std::size_t subsets = 0;
      for (std::size_t mask = 1; mask < (std::size_t(1) << (2 * n - 2));
           ++mask) {
        ++subsets;
      }
      expected += subsets;
    }
    CHECK(multiplier_moves(a).size() == expected);
    CHECK(multiplier_move_count(n) == expected);
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) {
      fact *= k;
    }
    CHECK(whitehead_moves(a).size() == expected + fact * (std::size_t(1) << n));
  }
}

TEST_CASE("moves composed with their inverses are the identity") {
  auto const words = reduced_words(3, 4);
  std::mt19937_64 rng(31);
  std::vector<Word> sample;
  for (int i = 0; i < 60; ++i) {
    sample.push_back(test::random_reduced(rng, 3, 1 + rng() % 8));
  }
  for (auto const& m : whitehead_moves(xyz)) {
    auto inv = inverse(m, xyz);
    CHECK(is_automorphism_free(m.map));
    for (auto const& x : sample) {
      CHECK(apply(inv.map, apply(m.map, x)) == x);
      CHECK(apply(m.map, apply(inv.map, x)) == x);
    }
  }
}

TEST_CASE("minimization examples") {
  std::vector<Word> t{w("x y", xy)};
  auto trace = minimize_tuple(t, xy);
  REQUIRE(trace.final.size() == 1);
  CHECK(trace.final[0].size() == 1);
  CHECK_FALSE(trace.moves.empty());

  t     = {w("x", xy)};
  trace = minimize_tuple(t, xy);
  CHECK(trace.moves.empty());
  CHECK(trace.final == t);

  t     = {commutator(w("x", xy), w("y", xy))};
  trace = minimize_tuple(t, xy, true);
  CHECK(trace.moves.empty());
  CHECK(trace.final[0].size() == 4);
  // No single move shortens the commutator.
  for (auto const& m : whitehead_moves(xy)) {
    CHECK(cyclically_reduce(apply(m.map, t[0])).core.size() >= 4);
  }
}

TEST_CASE("minimization traces replay and never lengthen") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    std::vector<Word> t;
    for (std::size_t k = 1 + rng() % 2; k > 0; --k) {
      t.push_back(test::random_reduced(rng, 3, 1 + rng() % 10));
    }
    for (bool cyclic : {false, true}) {
      auto trace = minimize_tuple(t, xyz, cyclic);
      auto cur   = t;
      if (cyclic) {
        for (auto& x : cur) {
          x = cyclically_reduce(x).core;
        }
      }
      std::size_t len = total_length(cur);
      for (auto const& m : trace.moves) {
        cur = apply_all(m.map, cur);
        if (cyclic) {
          for (auto& x : cur) {
            x = cyclically_reduce(x).core;
          }
        }
        CHECK(total_length(cur) < len);
        len = total_length(cur);
      }
      CHECK(cur == trace.final);
    }
  }
}

TEST_CASE("primitivity examples") {
  CHECK(is_primitive(w("x", xy), xy).verdict == Verdict::yes);
  CHECK(is_primitive(w("x y", xy), xy).verdict == Verdict::yes);
  auto r = is_primitive(commutator(w("x", xy), w("y", xy)), xy);
  CHECK(r.verdict == Verdict::no);
  CHECK_FALSE(r.cap_reached);
  CHECK(is_primitive(w("x^2", xy), xy).verdict == Verdict::no);
  CHECK(is_primitive(w("x^2 y^2", xy), xy).verdict == Verdict::no);
  CHECK_THROWS_AS(is_primitive(Word{}, xy), DomainError);
}

TEST_CASE("inconclusive when the cap is hit") {
  WhiteheadOptions tiny{2};
  auto r = is_primitive(commutator(w("x", xy), w("y", xy)), xy, tiny);
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK(r.cap_reached);
  CHECK(to_string(r.verdict) == "inconclusive");
}

TEST_CASE("Nielsen primitives are primitive") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 20; ++i) {
    Alphabet const& a = i % 2 ? xyz : xy;
    Word p = nielsen_primitive(rng, a.size(), 6);
    CHECK(is_primitive(p, a).verdict == Verdict::yes);
    std::vector<Word> single{p};
    CHECK(is_free_factor(single, a).verdict == Verdict::yes);
  }
}

TEST_CASE("free factor examples") {
  std::vector<Word> t{w("x", xy)};
  CHECK(is_free_factor(t, xy).verdict == Verdict::yes);
  t = {w("x^2", xy)};
  CHECK(is_free_factor(t, xy).verdict == Verdict::no);
  t = {w("x", xy), w("y", xy)};
  CHECK(is_free_factor(t, xy).verdict == Verdict::yes);
  t = {w("x y x^-1", xyz), w("z", xyz)};
  CHECK(is_free_factor(t, xyz).verdict == Verdict::yes);
  t = {w("x^2", xyz), w("y", xyz)};
  CHECK(is_free_factor(t, xyz).verdict == Verdict::no);
  t = {w("x", xy), w("x^2", xy)};
  CHECK_THROWS_AS(is_free_factor(t, xy), DomainError);
  t = {Word{}};
  CHECK_THROWS_AS(is_free_factor(t, xy), DomainError);
}

TEST_CASE("primitive iff free factor of rank one, length <= 6 in F2") {
  for (auto const& x : reduced_words(2, 6)) {
    if (x.empty()) {
      continue;
    }
    std::vector<Word> single{x};
    auto p = is_primitive(x, xy);
    auto f = is_free_factor(single, xy);
    CHECK(p.verdict != Verdict::inconclusive);
    CHECK(p.verdict == f.verdict);
  }
}

TEST_CASE("primitivity is invariant under automorphisms") {
  std::mt19937_64 rng(34);
  auto const      moves = whitehead_moves(xy);
  auto const      words = reduced_words(2, 4);
  for (int i = 0; i < 100; ++i) {
    Word x = words[1 + rng() % (words.size() - 1)];
    Word y = x;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) {
      y = apply(moves[rng() % moves.size()].map, y);
    }
    CHECK(is_primitive(x, xy).verdict == is_primitive(y, xy).verdict);
  }
}
