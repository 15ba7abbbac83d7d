#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace garside;
using namespace testing_support;

namespace {

Simple word_simple(const ArtinStructure& g, std::vector<int> w) {
  return g.simple_from_word(w);
}

}  // namespace

TEST_CASE("artin descriptor basics") {
  ArtinStructure b4(4);
  CHECK(b4.simples().size() == 24);
  CHECK(b4.to_literal(b4.delta()) == std::vector<int>{4, 3, 2, 1});
  CHECK(ArtinStructure(3).norm_of_delta() == 3);
  CHECK(b4.atoms().size() == 3);
  CHECK(ArtinStructure(5).simples().size() == 120);
  CHECK(ArtinStructure(6).simples().size() == 720);
  CHECK_THROWS_AS(ArtinStructure(1), std::invalid_argument);
  CHECK(std::is_sorted(b4.simples().begin(), b4.simples().end()));
}

TEST_CASE("artin delta is the staircase product") {
  for (int n = 2; n <= 7; ++n) {
    ArtinStructure   g(n);
    std::vector<int> w;
    for (int k = 1; k < n; ++k)
      for (int j = k; j >= 1; --j) w.push_back(j);
    CHECK(g.simple_from_word(w) == g.delta());
    CHECK(g.reduced_word(g.delta()) == w);
  }
}

TEST_CASE("artin prefix test examples") {
  ArtinStructure b3(3);
  const Simple   s12 = word_simple(b3, {1, 2});
  for (const auto& b : b3.simples()) {
    CHECK(b3.prefix_leq(b3.identity(), b));
    CHECK(b3.prefix_leq(b, b));
  }
  CHECK(b3.prefix_leq(b3.sigma(1), s12));
  CHECK_FALSE(b3.prefix_leq(b3.sigma(2), s12));
  CHECK(word_simple(b3, {1, 2, 1}) == word_simple(b3, {2, 1, 2}));
  CHECK(word_simple(b3, {1, 2, 1}) == b3.delta());
}

TEST_CASE("artin prefix agrees with inversion count and with the oracle") {
  for (int n = 2; n <= 4; ++n) {
    ArtinStructure g(n);
    for (const auto& a : g.simples()) {
      for (const auto& b : g.simples()) {
        const Perm pa = strand_perm(g, a), pb = strand_perm(g, b);
        const bool by_inv =
            inversions(pa) + inversions(compose(invert(pa), pb)) ==
            inversions(pb);
        CHECK(g.prefix_leq(a, b) == by_inv);
        CHECK(g.prefix_leq(a, b) == oracle_prefix(g, a, b));
      }
    }
  }
}

TEST_CASE("artin complements and tau") {
  ArtinStructure b4(4);
  CHECK(b4.right_complement(b4.delta()) == b4.identity());
  CHECK(b4.right_complement(b4.identity()) == b4.delta());
  CHECK(b4.tau(b4.sigma(1)) == b4.sigma(3));
  const Element x = Element::from_simple(b4, b4.sigma(1));
  const Element d = Element::delta_power(b4, 1);
  CHECK(inverse(d) * x * d == Element::from_simple(b4, b4.sigma(3)));
  for (int n = 2; n <= 6; ++n) {
    ArtinStructure g(n);
    for (const auto& s : g.simples()) {
      CHECK(g.norm(s) == inversions(strand_perm(g, s)));
      CHECK(g.norm(s) + g.norm(g.right_complement(s)) == n * (n - 1) / 2);
      CHECK(g.simple_from_word(g.reduced_word(s)) == s);
      CHECK(static_cast<int>(g.reduced_word(s).size()) == g.norm(s));
      // The delta conjugate, computed as a permutation.
      const Perm d = strand_perm(g, g.delta());
      CHECK(strand_perm(g, g.tau(s)) ==
            compose(compose(invert(d), strand_perm(g, s)), d));
    }
  }
}

TEST_CASE("artin meet is the greedy atom extension") {
  ArtinStructure g(4);
  for (const auto& a : g.simples()) {
    for (const auto& b : g.simples()) {
      const Element m = meet_by_atoms(Element::from_simple(g, a),
                                      Element::from_simple(g, b));
      CHECK(Element::from_simple(g, g.meet(a, b)) == m);
    }
  }
}

TEST_CASE("artin word conversions") {
  ArtinStructure b4(4);
  CHECK(b4.word(b4.identity()) == "1");
  CHECK(b4.word(b4.delta()) == "s1 s2 s1 s3 s2 s1");
  CHECK(b4.word(word_simple(b4, {3, 2, 1})) == "s3 s2 s1");
  CHECK(b4.from_literal(std::vector<int>{2, 1, 3, 4}) == b4.sigma(1));
  CHECK_THROWS_AS(b4.from_literal(std::vector<int>{1, 1, 3, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(b4.simple_from_word(std::vector<int>{1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(b4.sigma(4), std::invalid_argument);
}
