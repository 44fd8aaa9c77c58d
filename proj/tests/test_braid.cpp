#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotwork/braid.hpp"

using namespace knotwork;

namespace {

BraidWord random_word(std::mt19937& rng, int max_strands = 4, int max_len = 10) {
  std::uniform_int_distribution<int> nd(2, max_strands);
  int n = nd(rng);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::vector<int> letters;
  for (int i = len(rng); i > 0; --i)
    letters.push_back((rng() & 1) ? idx(rng) : -idx(rng));
  return BraidWord(n, letters);
}

}  // namespace

TEST_CASE("parse_braid") {
  BraidWord w = parse_braid("1 1 1");
  CHECK(w.strands == 2);
  CHECK(w.letters == std::vector<int>{1, 1, 1});
  BraidWord f8 = parse_braid("1 -2 1 -2");
  CHECK(f8.strands == 3);
  BraidWord split = parse_braid("n=4 1 1");
  CHECK(split.strands == 4);
  CHECK(parse_braid("").strands == 1);

  CHECK_THROWS_AS(parse_braid("1 0 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("n=2 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("1 x"), std::invalid_argument);
  CHECK_THROWS_WITH(parse_braid("1 2x"), Catch::Matchers::ContainsSubstring("2x"));
}

TEST_CASE("permutation and closure components") {
  auto [perm1, comps1] = permutation_and_components(parse_braid("1 1 1"));
  CHECK(comps1 == 1);
  CHECK(perm1.images == std::vector<int>{1, 0});

  auto [perm2, comps2] = permutation_and_components(BraidWord(3, {}));
  CHECK(comps2 == 3);

  auto [perm3, comps3] = permutation_and_components(torus_braid(3, 4));
  CHECK(comps3 == 1);

  // gcd rule for torus braids: components = gcd(p, q).
  CHECK(permutation_and_components(torus_braid(2, 4)).second == 2);
  CHECK(permutation_and_components(torus_braid(4, 2)).second == 2);
}

TEST_CASE("exponent_sum") {
  CHECK(exponent_sum(parse_braid("1 1 1")) == 3);
  CHECK(exponent_sum(parse_braid("1 -2 1 -2")) == 0);
  CHECK(exponent_sum(BraidWord(2, {})) == 0);
}

TEST_CASE("is_homogeneous") {
  CHECK(is_homogeneous(torus_braid(3, 4)));
  CHECK(is_homogeneous(parse_braid("1 -2 1 -2")));
  CHECK_FALSE(is_homogeneous(parse_braid("1 -1")));
  CHECK_FALSE(is_homogeneous(BraidWord(3, {1, 1})));  // sigma_2 missing
  CHECK_FALSE(is_homogeneous(BraidWord(2, {})));
}

TEST_CASE("torus_braid") {
  CHECK(torus_braid(2, 3) == parse_braid("1 1 1"));
  CHECK(torus_braid(3, 4) == parse_braid("1 2 1 2 1 2 1 2"));
  BraidWord unknot21 = torus_braid(2, 1);
  CHECK(unknot21.letters == std::vector<int>{1});
  CHECK(permutation_and_components(unknot21).second == 1);
  CHECK(torus_braid(2, -3).letters == std::vector<int>{-1, -1, -1});
  CHECK_THROWS_AS(torus_braid(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(torus_braid(3, 0), std::invalid_argument);
}

TEST_CASE("braid relations") {
  BraidWord w(4, {1, 3});
  BraidWord swapped = braid_relation_rewrite(w, 0, BraidRelation::far_commute);
  CHECK(swapped.letters == std::vector<int>{3, 1});

  BraidWord yb(3, {1, 2, 1});
  BraidWord yb2 = braid_relation_rewrite(yb, 0, BraidRelation::yang_baxter);
  CHECK(yb2.letters == std::vector<int>{2, 1, 2});

  CHECK_THROWS_AS(braid_relation_rewrite(BraidWord(3, {1, 2}), 0,
                                         BraidRelation::far_commute),
                  std::invalid_argument);
  CHECK_THROWS_AS(braid_relation_rewrite(BraidWord(3, {1, -2, 1}), 0,
                                         BraidRelation::yang_baxter),
                  std::invalid_argument);
  CHECK_THROWS_AS(braid_relation_rewrite(yb, 5, BraidRelation::yang_baxter),
                  std::invalid_argument);
}

TEST_CASE("markov moves") {
  BraidWord tre = parse_braid("1 1 1");
  BraidWord stab = markov_stabilize(tre, 1);
  CHECK(stab.strands == 3);
  CHECK(stab.letters == std::vector<int>{1, 1, 1, 2});
  CHECK(markov_destabilize(stab) == tre);

  BraidWord conj = markov_conjugate(tre, 1);
  CHECK(free_reduce(conj) == tre);

  CHECK_THROWS_AS(markov_destabilize(tre), std::invalid_argument);
  BraidWord twice(3, {2, 1, 2});
  CHECK_THROWS_AS(markov_destabilize(twice), std::invalid_argument);
  CHECK_THROWS_AS(markov_conjugate(tre, 0), std::invalid_argument);
  CHECK_THROWS_AS(markov_stabilize(tre, 2), std::invalid_argument);
}

TEST_CASE("moves preserve permutation data") {
  std::mt19937 rng(321);
  for (int i = 0; i < 100; ++i) {
    BraidWord w = random_word(rng);
    int comps = permutation_and_components(w).second;
    int esum = exponent_sum(w);

    CHECK(permutation_and_components(free_reduce(w)).second == comps);
    CHECK(exponent_sum(free_reduce(w)) == esum);

    if (w.strands >= 2) {
      std::uniform_int_distribution<int> gd(1, w.strands - 1);
      int g = (rng() & 1) ? gd(rng) : -gd(rng);
      BraidWord c = markov_conjugate(w, g);
      CHECK(permutation_and_components(c).second == comps);
      CHECK(exponent_sum(c) == esum);
    }
    int sign = (rng() & 1) ? 1 : -1;
    BraidWord s = markov_stabilize(w, sign);
    CHECK(permutation_and_components(s).second == comps);
    CHECK(exponent_sum(s) == esum + sign);
  }
}

TEST_CASE("reduced Burau blocks") {
  Matrix<Laurent1> b2 = burau_reduced(parse_braid("1"));
  REQUIRE(b2.rows() == 1);
  CHECK(b2(0, 0) == laurent1_term(-1, 2));

  Matrix<Laurent1> id3 = burau_reduced(BraidWord(3, {}));
  CHECK(id3(0, 0) == Laurent1::constant(1));
  CHECK(id3(0, 1).is_zero());

  Matrix<Laurent1> cancel = burau_reduced(parse_braid("1 -1"));
  CHECK(cancel == Matrix<Laurent1>::identity(1, Laurent1::constant(1)));

  CHECK_THROWS_AS(burau_reduced(BraidWord(1, {})), std::invalid_argument);
}

TEST_CASE("Burau is a homomorphism and respects the relations") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    BraidWord a = random_word(rng, 4, 6);
    BraidWord b = random_word(rng, 4, 6);
    b.strands = a.strands = 4;  // same group
    std::vector<int> cat = a.letters;
    cat.insert(cat.end(), b.letters.begin(), b.letters.end());
    CHECK(burau_reduced(BraidWord(4, cat)) ==
          burau_reduced(a) * burau_reduced(b));
  }
  // sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i + 1 < n; ++i) {
      CHECK(burau_reduced(BraidWord(n, {i, i + 1, i})) ==
            burau_reduced(BraidWord(n, {i + 1, i, i + 1})));
    }
  // far commutation
  CHECK(burau_reduced(BraidWord(4, {1, 3})) == burau_reduced(BraidWord(4, {3, 1})));
}
