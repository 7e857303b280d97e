#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hyperjac/tower.hpp"

namespace hyperjac {

/// Genus-1 curve y^2 = (x - r1)(x - r2)(x - r3) with coordinates in the
/// multiquadratic tower over the field of the r_i.
template <class K>
struct TorsionCurve {
  typename TowerElt<K>::BasisPtr basis;
  std::array<K, 3> roots;

  TowerElt<K> root(int a) const {  // a in {1, 2, 3}
    return TowerElt<K>::from_base(basis, roots[a - 1]);
  }
  TowerElt<K> zero() const { return TowerElt<K>(basis); }
  TowerElt<K> one() const { return TowerElt<K>::from_base(basis, basis->one); }
};

template <class K>
struct CurvePoint {
  bool at_infinity = false;
  TowerElt<K> x, y;

  static CurvePoint infinity(const typename TowerElt<K>::BasisPtr& basis) {
    return CurvePoint{true, TowerElt<K>(basis), TowerElt<K>(basis)};
  }
  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.at_infinity || b.at_infinity) return a.at_infinity == b.at_infinity;
    return a.x == b.x && a.y == b.y;
  }
};

/// The symbolic genus-1 curve with roots alpha_1, alpha_2, alpha_3.
TorsionCurve<RationalFunction> symbolic_torsion_curve();
/// The same curve specialized at a rational point with distinct coordinates.
TorsionCurve<Rat> numeric_torsion_curve(std::span<const Rat> point);

template <class K>
TowerElt<K> curve_rhs(const TorsionCurve<K>& c, const TowerElt<K>& x) {
  return (x - c.root(1)) * (x - c.root(2)) * (x - c.root(3));
}

template <class K>
bool on_curve(const TorsionCurve<K>& c, const CurvePoint<K>& p) {
  if (p.at_infinity) return true;
  return p.y * p.y == curve_rhs(c, p.x);
}

template <class K>
CurvePoint<K> ec_neg(const CurvePoint<K>& p) {
  if (p.at_infinity) return p;
  return CurvePoint<K>{false, p.x, -p.y};
}

// Chord-tangent group law for y^2 = x^3 - e1 x^2 + e2 x - e3:
// x3 = lambda^2 + e1 - x1 - x2, y3 = lambda (x1 - x3) - y1.

template <class K>
CurvePoint<K> ec_add(const TorsionCurve<K>& c, const CurvePoint<K>& p,
                     const CurvePoint<K>& q) {
  if (p.at_infinity) return q;
  if (q.at_infinity) return p;

  const TowerElt<K> e1 = c.root(1) + c.root(2) + c.root(3);
  TowerElt<K> lambda(c.basis);
  if (p.x == q.x) {
    if (p.y == -q.y) return CurvePoint<K>::infinity(c.basis);
    // Tangent: lambda = f'(x) / (2y).
    const TowerElt<K> e2 = c.root(1) * c.root(2) + c.root(1) * c.root(3) +
                           c.root(2) * c.root(3);
    const TowerElt<K> three = c.one() + c.one() + c.one();
    const TowerElt<K> two = c.one() + c.one();
    lambda = (three * p.x * p.x - two * e1 * p.x + e2) * (two * p.y).inverse();
  } else {
    lambda = (q.y - p.y) * (q.x - p.x).inverse();
  }
  const TowerElt<K> x3 = lambda * lambda + e1 - p.x - q.x;
  const TowerElt<K> y3 = lambda * (p.x - x3) - p.y;
  return CurvePoint<K>{false, x3, y3};
}

template <class K>
CurvePoint<K> ec_double(const TorsionCurve<K>& c, const CurvePoint<K>& p) {
  return ec_add(c, p, p);
}

template <class K>
CurvePoint<K> two_torsion_point(const TorsionCurve<K>& c, int a) {
  return CurvePoint<K>{false, c.root(a), c.zero()};
}

/// sqrt(alpha_a - alpha_b) rewritten into the tower basis: s_ab for a < b,
/// iota * s_ba for a > b.
template <class K>
TowerElt<K> root_difference_sqrt(const TorsionCurve<K>& c, int a, int b) {
  if (a == b) throw error("root_difference_sqrt needs distinct indices");
  if (a < b)
    return TowerElt<K>::radical(c.basis, radical_index(1, a, b));
  return TowerElt<K>::radical(c.basis, 0) *
         TowerElt<K>::radical(c.basis, radical_index(1, b, a));
}

/// The four points Q with 2Q = (alpha_a, 0), a in {1,2,3}:
/// x = alpha_a + eps * u * v and y = delta * u * v * (u + eps * v) where
/// u = sqrt(alpha_a - alpha_b), v = sqrt(alpha_a - alpha_c).  Branch order:
/// (eps, delta) = (+,+), (+,-), (-,+), (-,-).  Each point is certified by
/// y^2 = f(x) and ec_double landing on (alpha_a, 0); a failure of either
/// would falsify the 4-torsion field description and raises
/// consistency_error.
template <class K>
std::array<CurvePoint<K>, 4> halve_two_torsion(const TorsionCurve<K>& c, int a) {
  if (a < 1 || a > 3) throw error("two-torsion index must be 1, 2 or 3");
  const int b = (a == 1) ? 2 : 1;
  const int d = (a == 3) ? 2 : 3;
  const TowerElt<K> u = root_difference_sqrt(c, a, b);
  const TowerElt<K> v = root_difference_sqrt(c, a, d);
  const TowerElt<K> alpha = TowerElt<K>::from_base(c.basis, c.roots[a - 1]);

  std::array<CurvePoint<K>, 4> out = {
      CurvePoint<K>::infinity(c.basis), CurvePoint<K>::infinity(c.basis),
      CurvePoint<K>::infinity(c.basis), CurvePoint<K>::infinity(c.basis)};
  int slot = 0;
  const CurvePoint<K> parent = two_torsion_point(c, a);
  for (int eps : {+1, -1}) {
    const TowerElt<K> uv = u * v;
    const TowerElt<K> x = eps > 0 ? alpha + uv : alpha - uv;
    const TowerElt<K> y_plus =
        uv * (eps > 0 ? u + v : u - v);
    for (int delta : {+1, -1}) {
      CurvePoint<K> q{false, x, delta > 0 ? y_plus : -y_plus};
      if (!on_curve(c, q))
        throw consistency_error(
            "halving candidate is off the curve: constructed y^2 != f(x)");
      if (!(ec_double(c, q) == parent))
        throw consistency_error("halving candidate does not double to (alpha_a, 0)");
      out[slot++] = q;
    }
  }
  return out;
}

/// O, the three 2-torsion points, then the twelve halvings grouped by
/// parent: 16 pairwise distinct points forming J[4] = (Z/4)^2.
template <class K>
std::vector<CurvePoint<K>> enumerate_4_torsion(const TorsionCurve<K>& c) {
  std::vector<CurvePoint<K>> points;
  points.push_back(CurvePoint<K>::infinity(c.basis));
  for (int a = 1; a <= 3; ++a) points.push_back(two_torsion_point(c, a));
  for (int a = 1; a <= 3; ++a)
    for (const CurvePoint<K>& q : halve_two_torsion(c, a)) points.push_back(q);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw consistency_error("4-torsion points are not pairwise distinct");
  return points;
}

template <class K>
int point_order(const TorsionCurve<K>& c, const CurvePoint<K>& p) {
  if (p.at_infinity) return 1;
  const CurvePoint<K> twice = ec_double(c, p);
  if (twice.at_infinity) return 2;
  if (ec_double(c, twice).at_infinity) return 4;
  throw error("point order exceeds 4");
}

/// 16 x 16 index table of ec_add over the enumerated points; throws when a
/// sum escapes the set (it cannot, for a subgroup).
template <class K>
std::vector<std::vector<int>> addition_table(
    const TorsionCurve<K>& c, const std::vector<CurvePoint<K>>& points) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CurvePoint<K> sum = ec_add(c, points[i], points[j]);
      for (int k = 0; k < n; ++k)
        if (points[k] == sum) {
          table[i][j] = k;
          break;
        }
      if (table[i][j] < 0)
        throw consistency_error("sum of 4-torsion points left the set");
    }
  return table;
}

/// One certified generation identity: target = expression in the 4-torsion
/// coordinates (as a parseable tower-text string) verified symbolically.
struct GenerationIdentity {
  std::string target;      // "i", "s12", ...
  std::string expression;  // human-readable formula in point coordinates
  bool verified = false;
};

struct Torsion4Report {
  std::vector<CurvePoint<RationalFunction>> points;
  std::vector<int> orders;            // per point
  std::vector<int> halved_from;       // 0 when not a halving
  std::vector<GenerationIdentity> generation;
  std::vector<std::string> minimality;  // one line per radical
  VerificationReport summary;
};

/// Full genus-1 verification of the 4-torsion field description: constructs
/// J[4] symbolically, certifies doubling/ordering/closure, expresses every
/// radical in the coordinates, and checks each radical is indispensable.
/// Optional rational specialization re-runs the checks numerically.
Torsion4Report verify_torsion4(
    bool fault = false,
    const std::optional<std::array<Rat, 3>>& specialize_at = std::nullopt);

/// JSON list of the sixteen points: {"x": ..., "y": ..., "order": n,
/// "halved_from": k|null} per line element.
std::string torsion_points_json(const Torsion4Report& report);

/// Re-runs the torsion checks at `count` random independent rational triples
/// (exact arithmetic in the specialized degree-16 tower).
VerificationReport verify_torsion_specializations(int count, std::uint64_t seed);

}  // namespace hyperjac
