#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "hyperjac/group_enum.hpp"
#include "hyperjac/homology.hpp"
#include "support/oracles.hpp"

using namespace hyperjac;

namespace {

std::vector<ModMatrix> sigma_gens(int genus, int level) {
  std::vector<ModMatrix> gens;
  for (int k = 1; k <= 2 * genus; ++k)
    gens.push_back(ModMatrix::reduce(rep_letter(k, genus), Modulus(level)));
  return gens;
}

std::vector<ModMatrix> pure_gens(int genus, int level) {
  std::vector<ModMatrix> gens;
  for (const BraidWord& w : all_pure_braid_generators(2 * genus + 1))
    gens.push_back(rep_word(w, genus, Modulus(level)));
  return gens;
}

}  // namespace

TEST_CASE("closure of the identity alone") {
  const GroupClosure c = closure({ModMatrix::identity(2, Modulus(1))});
  CHECK(c.order() == 1);
}

TEST_CASE("closure mod 2 matches the brute-force symplectic count") {
  CHECK(closure(sigma_gens(1, 1)).order() == oracle::symplectic_count_f2(1));

  // Genus 2: the braid image is S_5 of order 120, a proper subgroup of the
  // 720-element symplectic group.
  const GroupClosure c = closure(sigma_gens(2, 1));
  CHECK(c.order() == 120);
  CHECK(oracle::symplectic_count_f2(2) == 720);
}

TEST_CASE("theorem-level closures match the independent residue enumeration") {
  for (int n : {2, 3}) {
    const GroupClosure c = closure(pure_gens(1, n));
    const auto expected = oracle::g1_gamma2_elements(n);
    REQUIRE(c.order() == Int(static_cast<unsigned long>(expected.size())));

    std::vector<std::string> expected_keys;
    for (const auto& [a, b, cc, d] : expected) {
      ModMatrix m(2, Modulus(n));
      m.set(0, 0, static_cast<std::uint8_t>(a));
      m.set(0, 1, static_cast<std::uint8_t>(b));
      m.set(1, 0, static_cast<std::uint8_t>(cc));
      m.set(1, 1, static_cast<std::uint8_t>(d));
      expected_keys.push_back(encode(m));
    }
    std::sort(expected_keys.begin(), expected_keys.end());
    CHECK(c.elements == expected_keys);
  }
}

TEST_CASE("verify_theorem_level hits the closed-form orders") {
  CHECK(verify_theorem_level(1, 2).passed);
  CHECK(verify_theorem_level(1, 3).passed);
  const VerificationReport r = verify_theorem_level(2, 2);
  CHECK(r.passed);
  CHECK(r.computed.starts_with("1024"));
}

TEST_CASE("verify_mod2_quotient: (2g+1)! for g = 1, 2, 3") {
  CHECK(verify_mod2_quotient(1).passed);
  CHECK(verify_mod2_quotient(2).passed);
  const VerificationReport g3 = verify_mod2_quotient(3);
  CHECK(g3.passed);
  CHECK(g3.computed == "5040");
}

TEST_CASE("verify_g1_full_sp against formula and brute force") {
  CHECK(verify_g1_full_sp(1).passed);
  CHECK(verify_g1_full_sp(2).passed);
  CHECK(verify_g1_full_sp(3).passed);
  CHECK(oracle::g1_sl2_count(2) == 48);
  CHECK(oracle::g1_sl2_count(3) == 384);
}

TEST_CASE("log map: frozen values") {
  const Modulus four(2);
  CHECK(log_map(ModMatrix::identity(2, four)).bits ==
        std::vector<std::uint8_t>{0, 0, 0, 0});
  CHECK(log_map(rep_word(pure_braid_generator(3, 1, 2), 1, four)).bits ==
        std::vector<std::uint8_t>{0, 1, 0, 0});
  CHECK(log_map(rep_word(pure_braid_generator(3, 1, 3), 1, four)).bits ==
        std::vector<std::uint8_t>{1, 1, 1, 1});

  CHECK_THROWS_AS(log_map(ModMatrix::reduce(rep_letter(1, 1), four)), error);
}

TEST_CASE("log map is a homomorphism on Gamma(2) mod 4") {
  std::mt19937_64 rng(51);
  for (int genus : {1, 2}) {
    const GroupClosure c = closure(pure_gens(genus, 2));
    const std::size_t size = c.elements.size();
    for (int trial = 0; trial < 1000; ++trial) {
      const ModMatrix m = c.element(rng() % size);
      const ModMatrix n = c.element(rng() % size);
      CHECK(log_map(mat_mul(m, n)) == lie_add(log_map(m), log_map(n)));
    }
  }
}

TEST_CASE("rank of log-mapped pure-braid generators is 2g^2 + g") {
  CHECK(gamma2mod4_rank(1) == 3);
  CHECK(gamma2mod4_rank(2) == 10);
  CHECK(gamma2mod4_rank(3) == 21);
}

TEST_CASE("Lie algebra solution space has dimension g(2g+1)") {
  CHECK(lie_solution_dimension(1) == 3);
  CHECK(lie_solution_dimension(2) == 10);
  CHECK(lie_solution_dimension(3) == 21);
  CHECK(lie_solution_dimension(4) == 36);
}

TEST_CASE("verify_mod4_rank passes, fault drops the rank") {
  CHECK(verify_mod4_rank(1).passed);
  CHECK(verify_mod4_rank(2).passed);
  CHECK_FALSE(verify_mod4_rank(2, /*fault=*/true).passed);
}

TEST_CASE("closure is independent of generator order, dumps byte-identical") {
  std::mt19937_64 rng(52);
  std::vector<ModMatrix> gens = pure_gens(1, 3);
  const GroupClosure base = closure(gens);

  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    const GroupClosure shuffled = closure(gens);
    CHECK(shuffled.elements == base.elements);

    std::ostringstream a, b;
    write_closure_dump(base, a);
    write_closure_dump(shuffled, b);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("element cap aborts instead of truncating") {
  CHECK_THROWS_AS(closure(sigma_gens(1, 2), /*element_cap=*/10),
                  closure_limit_error);
}

TEST_CASE("non-symplectic generators are rejected") {
  ModMatrix bad = ModMatrix::identity(2, Modulus(2));
  bad.set(0, 0, 2);
  CHECK_THROWS_AS(closure({bad}), error);
  // fault injection routes through exactly this rejection
  CHECK_THROWS_AS(verify_theorem_level(1, 2, kDefaultElementCap, /*fault=*/true),
                  error);
}

TEST_CASE("f2_rank on explicit vectors") {
  CHECK(f2_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(f2_rank({{1, 1}, {1, 1}}) == 1);
  CHECK(f2_rank({{0, 0}}) == 0);
  CHECK(f2_rank({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}}) == 2);
}
