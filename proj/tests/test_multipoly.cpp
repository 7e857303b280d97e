#include <doctest.h>

#include <random>

#include "hyperjac/ratfunc.hpp"

using namespace hyperjac;

namespace {

MultiPoly var(int i) { return MultiPoly::variable(3, i); }

MultiPoly random_poly(std::mt19937_64& rng, int max_terms = 4, int max_deg = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(0, max_deg);
  MultiPoly p(3);
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    MultiPoly::Exponents e{static_cast<unsigned>(deg(rng)),
                           static_cast<unsigned>(deg(rng)),
                           static_cast<unsigned>(deg(rng))};
    p = p + MultiPoly::constant(3, Rat(coeff(rng))).mul_by_power(0, e[0])
                .mul_by_power(1, e[1])
                .mul_by_power(2, e[2]);
  }
  return p;
}

RationalFunction random_ratfunc(std::mt19937_64& rng) {
  MultiPoly den(3);
  while (den.is_zero()) den = random_poly(rng, 3, 2);
  return RationalFunction(random_poly(rng), den);
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  CHECK((var(0) - var(1)) + (var(1) - var(2)) == var(0) - var(2));
  CHECK(var(0) * var(1) == var(1) * var(0));

  const MultiPoly p = (var(0) + var(1)) * (var(0) - var(1));
  CHECK(p == var(0) * var(0) - var(1) * var(1));

  CHECK(MultiPoly(3).is_zero());
  CHECK((p - p).is_zero());
}

TEST_CASE("grlex ordering: leading terms") {
  // a2^2 beats a1 on total degree; a1*a2 beats a2^2 on lexicographic tie
  const MultiPoly p = var(0) + var(1) * var(1);
  CHECK(p.leading_exponents() == MultiPoly::Exponents{0, 2, 0});
  const MultiPoly q = var(0) * var(1) + var(1) * var(1);
  CHECK(q.leading_exponents() == MultiPoly::Exponents{1, 1, 0});
}

TEST_CASE("exact division") {
  const MultiPoly num = (var(0) + var(1)) * (var(0) - var(1));
  CHECK(exact_divide(num, var(0) - var(1)) == var(0) + var(1));
  CHECK_THROWS_AS(exact_divide(var(0), var(1)), error);
  CHECK(divides(var(0) - var(1), num));
  CHECK_FALSE(divides(var(2), num));
}

TEST_CASE("gcd: frozen cases") {
  const MultiPoly d = var(0) - var(1);
  CHECK(poly_gcd(var(0) * var(0) - var(1) * var(1), d) == d);
  CHECK(poly_gcd(var(0), var(1)).is_constant());

  // content interplay: gcd(2(a1-a2)^2, 4(a1-a2)(a1-a3)) ~ (a1-a2)
  const MultiPoly f = (d * d) * Rat(2);
  const MultiPoly g = (d * (var(0) - var(2))) * Rat(4);
  CHECK(poly_gcd(f, g) == d);

  SUBCASE("gcd of random common-multiple pairs") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
      MultiPoly common(3);
      while (common.is_zero() || common.is_constant())
        common = random_poly(rng, 2, 2);
      const MultiPoly a = common * random_poly(rng, 2, 2);
      const MultiPoly b = common * random_poly(rng, 2, 2);
      if (a.is_zero() || b.is_zero()) continue;
      // the gcd contains the common factor
      CHECK(divides(primitive_part(common), poly_gcd(a, b)));
      CHECK(divides(poly_gcd(a, b), a));
      CHECK(divides(poly_gcd(a, b), b));
    }
  }
}

TEST_CASE("rational function normalization") {
  // (a1^2 - a2^2)/(a1 - a2) collapses to a1 + a2
  const RationalFunction r(var(0) * var(0) - var(1) * var(1), var(0) - var(1));
  CHECK(r == RationalFunction::from_poly(var(0) + var(1)));
  CHECK(r.denominator().is_constant());

  // the same value reached two ways has one representation
  const RationalFunction s =
      RationalFunction(var(0), var(1)) + RationalFunction(var(1), var(0));
  const RationalFunction t = RationalFunction(
      var(0) * var(0) + var(1) * var(1), var(0) * var(1));
  CHECK(s == t);

  // denominator is primitive with positive leading coefficient
  const RationalFunction u(var(0), (var(0) - var(1)) * Rat(-2));
  CHECK(u.denominator() == var(0) - var(1));
}

TEST_CASE("rational function field identities") {
  const RationalFunction d12(var(0) - var(1), MultiPoly::constant(3, Rat(1)));
  const RationalFunction d23(var(1) - var(2), MultiPoly::constant(3, Rat(1)));
  CHECK(d12 + d23 == RationalFunction::from_poly(var(0) - var(2)));
  CHECK(d12.inverse() * d12 == RationalFunction::constant(3, Rat(1)));
  CHECK_THROWS_AS(RationalFunction(3).inverse(), error);

  SUBCASE("random inverse and ring laws") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 25; ++trial) {
      const RationalFunction a = random_ratfunc(rng);
      const RationalFunction b = random_ratfunc(rng);
      const RationalFunction c = random_ratfunc(rng);
      CHECK((a + b) - b == a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == RationalFunction::constant(3, Rat(1)));
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(63);
  std::uniform_int_distribution<int> v(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng);
    const Rat point[3] = {Rat(v(rng)), Rat(v(rng)), Rat(v(rng))};
    CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
    CHECK((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
  }
}

TEST_CASE("derivative") {
  const MultiPoly p = var(0) * var(0) * var(1);
  CHECK(p.derivative(0) == var(0) * var(1) * Rat(2));
  CHECK(p.derivative(1) == var(0) * var(0));
  CHECK(p.derivative(2).is_zero());
}

TEST_CASE("non-square certification") {
  const MultiPoly d12 = var(0) - var(1);
  const MultiPoly d13 = var(0) - var(2);
  const MultiPoly d23 = var(1) - var(2);

  CHECK(certified_nonsquare(d12));
  CHECK(certified_nonsquare(d12 * d13));
  CHECK_FALSE(certified_nonsquare(d12 * d12));
  CHECK_FALSE(certified_nonsquare(d12 * d12 * d23 * d23));

  // the full triangle product has even degree in every variable, so this
  // exercises the gcd-based certificate
  std::string how;
  CHECK(certified_nonsquare(d12 * d13 * d23, &how));
  CHECK(how.find("gcd") != std::string::npos);

  CHECK(certified_nonsquare(MultiPoly::constant(3, Rat(5))));
  CHECK_FALSE(certified_nonsquare(MultiPoly::constant(3, Rat(4))));
  CHECK_FALSE(certified_nonsquare(MultiPoly::constant(3, Rat(4, 9))));
}

TEST_CASE("is_rational_square") {
  CHECK(is_rational_square(Rat(4)));
  CHECK(is_rational_square(Rat(9, 16)));
  CHECK_FALSE(is_rational_square(Rat(-4)));
  CHECK_FALSE(is_rational_square(Rat(2)));
  CHECK_FALSE(is_rational_square(Rat(4, 3)));
}
