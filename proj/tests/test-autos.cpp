#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>
#include <set>

#include "cgt/autos.hpp"
#include "cgt/closure.hpp"
#include "cgt/enumerate.hpp"
#include "cgt/splittings.hpp"
#include "support.hpp"

using namespace cgt;
using test::w;

namespace {
  Alphabet const xy  = test::alphabet("x y");
  Alphabet const xyz = test::alphabet("x y z");

  Endomorphism free_map(Alphabet const& a, std::vector<std::string> const& im) {
    std::vector<Word> images;
    for (auto const& s : im) {
      images.push_back(w(s, a));
    }
    return Endomorphism(FreeDomain{a}, images);
  }

  HnnPresentation const thm = counterexample_presentation(0);

  Endomorphism thm_g() {
    auto images = Endomorphism::identity(thm).images();
    auto l      = counterexample_letters(0);
    images[l.y] = gen(l.y, -1);
    images[thm.stable()] =
        thm.t() * w("a y^-1 b y^-1", thm.full()).inverse();
    return Endomorphism(thm, images);
  }

  AmalgamPresentation commutator_amalgam() {
    Alphabet first({"x", "y"}), second({"z", "s"});
    Alphabet full = first.extended(second.names());
    return AmalgamPresentation(first, second, w("x y x^-1 y^-1", full),
                               w("z", full));
  }

  Endomorphism random_free_map(std::mt19937_64& rng, Alphabet const& a) {
    std::vector<Word> images;
    for (std::size_t g = 0; g < a.size(); ++g) {
      images.push_back(test::random_reduced_upto(rng, a.size(), 3));
    }
    return Endomorphism(FreeDomain{a}, images);
  }
}  // namespace

TEST_CASE("apply examples") {
  auto g  = thm_g();
  CHECK(g.is_homomorphism());
  CHECK(apply(g, thm.v()) == w("a y^-1 b y^-1 a y b y", thm.full()));
  std::mt19937_64 rng(51);
  auto id = Endomorphism::identity(thm);
  for (int i = 0; i < 50; ++i) {
    Word x = test::random_reduced_upto(rng, thm.full().size(), 10);
    CHECK(hnn_equal(thm, apply(id, x), x));
  }
  // Twist t -> t v (equivalently u t) on t^2; no pinch arises.
  Word t = thm.t();
  CHECK(apply(dehn_twist(thm, 1), t * t) == t * thm.v() * t * thm.v());
}

TEST_CASE("apply is a homomorphism") {
  std::mt19937_64 rng(52);
  auto g = thm_g();
  for (int i = 0; i < 100; ++i) {
    Word a = test::random_reduced_upto(rng, thm.full().size(), 8);
    Word b = test::random_reduced_upto(rng, thm.full().size(), 8);
    CHECK(hnn_equal(thm, apply(g, a * b), apply(g, a) * apply(g, b)));
    auto f = random_free_map(rng, xyz);
    Word c = test::random_reduced_upto(rng, 3, 8);
    Word d = test::random_reduced_upto(rng, 3, 8);
    CHECK(apply(f, c * d) == apply(f, c) * apply(f, d));
  }
}

TEST_CASE("compose examples") {
  auto f  = free_map(xy, {"x y", "y"});
  auto id = Endomorphism::identity(FreeDomain{xy});
  CHECK(agree_on_generators(compose(id, f), f));
  auto swap = free_map(xy, {"y", "x"});
  CHECK(agree_on_generators(compose(swap, swap), id));
  for (long n = -2; n <= 2; ++n) {
    for (long m = -2; m <= 2; ++m) {
      CHECK(agree_on_generators(compose(dehn_twist(thm, n), dehn_twist(thm, m)),
                                dehn_twist(thm, n + m)));
    }
  }
}

TEST_CASE("compose is associative") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    auto f = random_free_map(rng, xyz);
    auto g = random_free_map(rng, xyz);
    auto h = random_free_map(rng, xyz);
    CHECK(agree_on_generators(compose(f, compose(g, h)),
                              compose(compose(f, g), h)));
  }
}

TEST_CASE("automorphism detection examples") {
  CHECK(is_automorphism_free(free_map(xy, {"x y", "y"})));
  CHECK_FALSE(is_automorphism_free(free_map(xy, {"x^2", "y"})));
  CHECK(is_automorphism_free(free_map(xy, {"y", "x"})));
  CHECK_FALSE(is_automorphism_free(free_map(xy, {"x y x^-1 y^-1", "y"})));
  // det = 1 but not surjective: images generate a proper subgroup.
  auto f = free_map(xy, {"x y x y^-1 x^-1", "y"});
  CHECK(std::labs(determinant(abelian_matrix(f))) == 1);
  CHECK_FALSE(is_automorphism_free(f));
}

TEST_CASE("automorphisms have unimodular abelianization") {
  std::mt19937_64 rng(54);
  auto const      moves = whitehead_moves(xyz);
  int             autos = 0;
  for (int i = 0; i < 300; ++i) {
    Endomorphism f = i % 2 ? random_free_map(rng, xyz)
                           : compose(moves[rng() % moves.size()].map,
                                     moves[rng() % moves.size()].map);
    if (is_automorphism_free(f)) {
      ++autos;
      CHECK(std::labs(determinant(abelian_matrix(f))) == 1);
      auto fix = fixed_words(f, 3);
      for (auto const& b : basis(fix).basis) {
        CHECK(apply(f, b) == b);
      }
    }
  }
  CHECK(autos >= 150);
}

TEST_CASE("determinant") {
  CHECK(determinant({{2, 1}, {1, 1}}) == 1);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{2, 0, 0}, {0, 3, 0}, {1, 1, 1}}) == 6);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("automorphism pairs") {
  auto id = Endomorphism::identity(thm);
  CHECK(verify_automorphism_pair(id, id));
  CHECK(verify_automorphism_pair(dehn_twist(thm, 1), dehn_twist(thm, -1)));
  auto g = thm_g();
  // g(g(t)) = t v^-1 = u^-1 t, so g is not an involution; its inverse
  // sends t to t a y b y.
  CHECK_FALSE(verify_automorphism_pair(g, g));
  CHECK(hnn_equal(thm, apply(g, apply(g, thm.t())), thm.u().inverse() * thm.t()));
  auto inv_images = id.images();
  auto l          = counterexample_letters(0);
  inv_images[l.y] = gen(l.y, -1);
  inv_images[thm.stable()] = thm.t() * w("a y b y", thm.full());
  CHECK(verify_automorphism_pair(g, Endomorphism(thm, inv_images)));
  auto bad = id.images();
  bad[thm.stable()] = thm.t() * thm.u();
  CHECK_THROWS_AS(verify_automorphism_pair(Endomorphism(thm, bad), id),
                  DomainError);
}

TEST_CASE("order examples") {
  CHECK(order_bounded(free_map(xy, {"y", "x"}), 10) == 2u);
  CHECK(order_bounded(Endomorphism::identity(FreeDomain{xy}), 10) == 1u);
  CHECK_FALSE(order_bounded(free_map(xy, {"x y", "y"}), 20));
  CHECK(order_bounded(free_map(xyz, {"y", "z", "x"}), 10) == 3u);
  CHECK(order_bounded(free_map(xy, {"y^-1", "x"}), 10) == 4u);
}

TEST_CASE("fixed word examples") {
  // Conjugation by x fixes exactly the centralizer of x.
  auto ad = free_map(xy, {"x", "x y x^-1"});
  auto g  = fixed_words(ad, 6);
  CHECK(g == build_subgroup_graph(std::vector<Word>{w("x", xy)}, 2));
  for (auto const& z : reduced_words(2, 6)) {
    bool fixed = w("x", xy) * z * w("x^-1", xy) == z;
    CHECK(contains(g, z) == fixed);
  }
  CHECK(is_whole_group(fixed_words(Endomorphism::identity(FreeDomain{xy}), 2)));
  auto swap = free_map(xyz, {"x", "z", "y"});
  auto fx   = fixed_words(swap, 8);
  CHECK(fx == build_subgroup_graph(std::vector<Word>{w("x", xyz)}, 3));
}

TEST_CASE("fixed words do not depend on workers") {
  auto swap = free_map(xyz, {"x", "z", "y"});
  CHECK(fixed_words(swap, 5, 1) == fixed_words(swap, 5, 3));
  auto f = free_map(xyz, {"x", "y z", "z"});
  CHECK(fixed_words(f, 5, 1) == fixed_words(f, 5, 4));
}

TEST_CASE("orbit examples") {
  auto hnn = [](long n) { return dehn_twist(thm, n); };
  auto r   = orbit_bounded(hnn, thm.t(), 100, "hnn twist");
  CHECK(r.distinct == 101);
  CHECK_FALSE(r.first_collision);
  CHECK(r.images.size() == 101);

  auto fixed = orbit_bounded(hnn, thm.u(), 10);
  CHECK(fixed.distinct == 1);
  REQUIRE(fixed.first_collision);
  CHECK(*fixed.first_collision == std::make_pair<std::size_t, std::size_t>(0, 1));

  auto pres = commutator_amalgam();
  auto amal = [&](long n) { return dehn_twist(pres, n); };
  Word g1g2 = w("x s", pres.full());
  r = orbit_bounded(amal, g1g2, 50, "amalgam twist");
  CHECK(r.distinct == 51);
  // Oracle: the second factor embeds, so z^n s z^-n are distinct words.
  std::set<Word> seconds;
  for (long n = 0; n <= 50; ++n) {
    seconds.insert(w("z", pres.full()).pow(n) * w("s", pres.full()) *
                   w("z", pres.full()).pow(-n));
  }
  CHECK(seconds.size() == 51);
}

TEST_CASE("orbits never undercount") {
  auto hnn = [](long n) { return dehn_twist(thm, n); };
  std::mt19937_64 rng(55);
  for (int i = 0; i < 20; ++i) {
    Word x = test::random_reduced_upto(rng, thm.full().size(), 6);
    auto r = orbit_bounded(hnn, x, 20);
    std::size_t classes = 0;
    for (std::size_t a = 0; a < r.images.size(); ++a) {
      bool fresh = true;
      for (std::size_t b = 0; b < a && fresh; ++b) {
        fresh = !hnn_equal(thm, r.images[a], r.images[b]);
      }
      classes += fresh;
    }
    CHECK(r.distinct == classes);
  }
}
