#include <doctest.h>

#include <random>

#include "hyperjac/braid.hpp"

using namespace hyperjac;

TEST_CASE("free reduction") {
  CHECK(free_reduce(BraidWord(3, {1, -1})) == BraidWord::empty(3));
  CHECK(free_reduce(BraidWord(3, {2, 1, -1, 2})) == BraidWord(3, {2, 2}));
  CHECK(free_reduce(BraidWord(5, {1, 2, -2, -1, 3})) == BraidWord(5, {3}));
}

TEST_CASE("permutation projection") {
  CHECK(permutation_of(BraidWord::empty(3)).is_identity());

  const Permutation p = permutation_of(BraidWord(3, {1}));
  CHECK(p.apply(0) == 1);  // sigma_1 -> (1 2)
  CHECK(p.apply(1) == 0);
  CHECK(p.apply(2) == 2);

  CHECK(permutation_of(BraidWord(3, {1, 1})).is_identity());
  CHECK(permutation_of(BraidWord(3, {-1})) == permutation_of(BraidWord(3, {1})));
}

TEST_CASE("permutation projection is a homomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int strands = 3 + static_cast<int>(rng() % 5);
    const BraidWord u = random_word(strands, 25, rng);
    const BraidWord v = random_word(strands, 25, rng);
    CHECK(permutation_of(concat(u, v)) ==
          compose(permutation_of(u), permutation_of(v)));
  }
}

TEST_CASE("free reduction preserves the projection") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const BraidWord w = random_word(5, 30, rng);
    CHECK(permutation_of(free_reduce(w)) == permutation_of(w));
  }
}

TEST_CASE("pure braid generators") {
  CHECK(pure_braid_generator(3, 1, 2) == BraidWord(3, {1, 1}));
  CHECK(pure_braid_generator(3, 1, 3) == BraidWord(3, {2, 1, 1, -2}));
  CHECK(pure_braid_generator(5, 2, 5) == BraidWord(5, {4, 3, 2, 2, -3, -4}));

  // 2g^2 + g generators at genus g
  CHECK(all_pure_braid_generators(5).size() == 10);
  CHECK(all_pure_braid_generators(7).size() == 21);

  for (int strands : {3, 5, 7})
    for (const BraidWord& a : all_pure_braid_generators(strands))
      CHECK(is_pure(a));

  CHECK_THROWS_AS(pure_braid_generator(3, 2, 2), error);
  CHECK_THROWS_AS(pure_braid_generator(3, 0, 2), error);
  CHECK_THROWS_AS(pure_braid_generator(3, 1, 4), error);
}

TEST_CASE("purity detection") {
  CHECK(is_pure(BraidWord(3, {1, 1})));
  CHECK_FALSE(is_pure(BraidWord(3, {1})));
  CHECK(is_pure(pure_braid_generator(3, 1, 3)));
  // w * w^-1 is always pure (it is trivial)
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = random_word(5, 20, rng);
    CHECK(is_pure(concat(w, inverse_word(w))));
  }
}

TEST_CASE("word text syntax") {
  const BraidWord w = parse_word(5, "1,2,-1");
  CHECK(w == BraidWord(5, {1, 2, -1}));
  CHECK(format_word(w) == "1,2,-1");
  CHECK(parse_word(3, "") == BraidWord::empty(3));
  CHECK(parse_word(3, " 1 , -2 ") == BraidWord(3, {1, -2}));

  CHECK_THROWS_AS(parse_word(3, "1,x"), error);
  CHECK_THROWS_AS(parse_word(3, "3"), error);   // index out of range
  CHECK_THROWS_AS(parse_word(3, "0"), error);   // zero is not a letter
}

TEST_CASE("letter validation") {
  CHECK_THROWS_AS(BraidWord(3, {5}), error);
  CHECK_THROWS_AS(BraidWord(1, {}), error);
}
