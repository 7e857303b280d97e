#include <doctest.h>

#include "hyperjac/torsion4.hpp"
#include "hyperjac/tower_text.hpp"

using namespace hyperjac;

namespace {

using SymCurve = TorsionCurve<RationalFunction>;
using SymPoint = CurvePoint<RationalFunction>;

struct Fixture {
  SymCurve curve = symbolic_torsion_curve();
  SymbolicTower s12 = SymbolicTower::radical(curve.basis, 1);
  SymbolicTower s13 = SymbolicTower::radical(curve.basis, 2);
};

}  // namespace

TEST_CASE("two-torsion arithmetic") {
  const Fixture f;
  const SymPoint t1 = two_torsion_point(f.curve, 1);
  const SymPoint t2 = two_torsion_point(f.curve, 2);
  const SymPoint t3 = two_torsion_point(f.curve, 3);
  const SymPoint o = SymPoint::infinity(f.curve.basis);

  CHECK(ec_add(f.curve, t1, o) == t1);
  CHECK(ec_add(f.curve, o, t2) == t2);
  CHECK(ec_add(f.curve, t1, t1) == o);
  // the three 2-torsion points sum to O pairwise-to-the-third
  CHECK(ec_add(f.curve, t1, t2) == t3);
  CHECK(ec_add(f.curve, t2, t3) == t1);
  CHECK(ec_add(f.curve, ec_add(f.curve, t1, t2), t3) == o);
}

TEST_CASE("halvings of (alpha_1, 0): frozen coordinates") {
  const Fixture f;
  const auto quad = halve_two_torsion(f.curve, 1);

  const SymbolicTower alpha1 =
      SymbolicTower::from_base(f.curve.basis, RationalFunction::variable(3, 0));
  const SymbolicTower prod = f.s12 * f.s13;

  // plus branch: x = a1 + s12 s13, y = s12 s13 (s12 + s13)
  CHECK(quad[0].x == alpha1 + prod);
  CHECK(quad[0].y == prod * (f.s12 + f.s13));
  CHECK(quad[1].x == quad[0].x);
  CHECK(quad[1].y == -quad[0].y);
  // minus branch: x = a1 - s12 s13, y = +- s12 s13 (s12 - s13)
  CHECK(quad[2].x == alpha1 - prod);
  CHECK(quad[2].y == prod * (f.s12 - f.s13));
  CHECK(quad[3].y == -quad[2].y);
}

TEST_CASE("iota enters through the second halving") {
  const Fixture f;
  const auto quad = halve_two_torsion(f.curve, 2);
  for (const auto& q : quad) CHECK(q.x.depends_on_radical(0));
}

TEST_CASE("every halving doubles back to its parent") {
  const Fixture f;
  for (int a = 1; a <= 3; ++a) {
    const SymPoint parent = two_torsion_point(f.curve, a);
    for (const auto& q : halve_two_torsion(f.curve, a)) {
      CHECK(on_curve(f.curve, q));
      CHECK(ec_double(f.curve, q) == parent);
      CHECK(point_order(f.curve, q) == 4);
    }
  }
}

TEST_CASE("the sixteen 4-torsion points form (Z/4)^2") {
  const Fixture f;
  const auto points = enumerate_4_torsion(f.curve);
  REQUIRE(points.size() == 16);

  int order4 = 0;
  for (const auto& p : points) {
    CHECK(on_curve(f.curve, p));
    if (point_order(f.curve, p) == 4) ++order4;
  }
  CHECK(order4 == 12);

  const auto table = addition_table(f.curve, points);

  SUBCASE("group axioms via the table") {
    for (int j = 0; j < 16; ++j) {
      CHECK(table[0][j] == j);
      CHECK(table[j][0] == j);
    }
    for (int i = 0; i < 16; ++i) {
      bool has_inverse = false;
      for (int j = 0; j < 16; ++j) has_inverse |= table[i][j] == 0;
      CHECK(has_inverse);
    }
  }

  SUBCASE("commutativity and full associativity sweep (16^3 exact)") {
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j) CHECK(table[i][j] == table[j][i]);
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j)
        for (int k = 0; k < 16; ++k)
          CHECK(table[table[i][j]][k] == table[i][table[j][k]]);
  }

  SUBCASE("doubling a proper point lands on 2-torsion, never O") {
    for (const auto& p : points) {
      if (point_order(f.curve, p) != 4) continue;
      const SymPoint twice = ec_double(f.curve, p);
      CHECK_FALSE(twice.at_infinity);
      CHECK(point_order(f.curve, twice) == 2);
    }
  }
}

TEST_CASE("full torsion4 verification") {
  const Torsion4Report report = verify_torsion4();
  CHECK(report.summary.passed);
  REQUIRE(report.generation.size() == 5);
  for (const auto& identity : report.generation) CHECK(identity.verified);
  for (const auto& line : report.minimality)
    CHECK(line.find("NOT") == std::string::npos);

  SUBCASE("fault injection fails the checks") {
    CHECK_FALSE(verify_torsion4(/*fault=*/true).summary.passed);
  }

  SUBCASE("points JSON shape") {
    const std::string json = torsion_points_json(report);
    CHECK(json.front() == '[');
    CHECK(json.find("\"halved_from\":1") != std::string::npos);
    CHECK(json.find("\"order\":4") != std::string::npos);
    CHECK(json.find("s12") != std::string::npos);
  }
}

TEST_CASE("minimality: each radical is indispensable") {
  const Fixture f;
  const auto points = enumerate_4_torsion(f.curve);
  for (int r = 0; r < 4; ++r) {
    std::vector<int> complement;
    for (int k = 0; k < 4; ++k)
      if (k != r) complement.push_back(k);
    bool needed = false;
    for (const auto& p : points) {
      if (p.at_infinity) continue;
      needed = needed || !p.x.restricted_to(complement).has_value() ||
               !p.y.restricted_to(complement).has_value();
    }
    CHECK(needed);
  }
}

TEST_CASE("exact rational specializations agree with the symbolic points") {
  CHECK(verify_torsion_specializations(10, 314159).passed);
}

TEST_CASE("explicit numeric curve at (0, -2, -5)") {
  const Rat point[3] = {Rat(0), Rat(-2), Rat(-5)};
  REQUIRE(numeric_point_independent(point));
  const TorsionCurve<Rat> curve = numeric_torsion_curve(point);
  const auto points = enumerate_4_torsion(curve);
  CHECK(points.size() == 16);
  const auto table = addition_table(curve, points);
  CHECK(table[1][2] == 3);  // (a1,0) + (a2,0) = (a3,0)
}

TEST_CASE("on_curve rejects off-curve points") {
  const Fixture f;
  SymPoint p = two_torsion_point(f.curve, 1);
  p.y = p.y + SymbolicTower::from_base(f.curve.basis,
                                       RationalFunction::constant(3, Rat(1)));
  CHECK_FALSE(on_curve(f.curve, p));
}
