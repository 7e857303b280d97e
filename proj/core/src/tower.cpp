#include "hyperjac/tower.hpp"

#include <algorithm>

namespace hyperjac {

int radical_index(int genus, int i, int j) {
  const int m = 2 * genus + 1;
  if (i < 1 || j <= i || j > m) throw error("radical_index: need 1 <= i < j <= 2g+1");
  // 1 + number of pairs (i', j') lexicographically before (i, j)
  int idx = 1;
  for (int a = 1; a < i; ++a) idx += m - a;
  idx += j - i - 1;
  return idx;
}

SymbolicBasisPtr symbolic_radical_basis(int genus) {
  const int m = 2 * genus + 1;
  std::vector<std::string> names{"i"};
  std::vector<RationalFunction> squares{RationalFunction::constant(m, Rat(-1))};
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      names.push_back("s" + std::to_string(i) + std::to_string(j));
      squares.push_back(RationalFunction::variable(m, i - 1) -
                        RationalFunction::variable(m, j - 1));
    }
  return std::make_shared<RadicalBasis<RationalFunction>>(
      RadicalBasis<RationalFunction>{std::move(names), std::move(squares),
                                     RationalFunction(m),
                                     RationalFunction::constant(m, Rat(1))});
}

NumericBasisPtr numeric_radical_basis(int genus, std::span<const Rat> point) {
  const int m = 2 * genus + 1;
  if (static_cast<int>(point.size()) != m)
    throw error("specialization point has wrong dimension");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (point[i] == point[j])
        throw error("specialization point must have distinct coordinates");

  std::vector<std::string> names{"i"};
  std::vector<Rat> squares{Rat(-1)};
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      names.push_back("s" + std::to_string(i) + std::to_string(j));
      squares.push_back(point[i - 1] - point[j - 1]);
    }
  return std::make_shared<RadicalBasis<Rat>>(RadicalBasis<Rat>{
      std::move(names), std::move(squares), Rat(0), Rat(1)});
}

NumericTower specialize(const SymbolicTower& x, const NumericBasisPtr& basis,
                        std::span<const Rat> point) {
  NumericTower out(basis);
  for (const auto& [mask, c] : x.coefficients()) {
    NumericTower term(basis);
    const Rat value = c.evaluate(point);
    if (value == 0) continue;
    NumericTower monomial = NumericTower::from_base(basis, value);
    SymbolicTower::Mask bits = mask;
    for (int k = 0; bits != 0; ++k, bits >>= 1)
      if (bits & 1) monomial = monomial * NumericTower::radical(basis, k);
    out = out + monomial;
  }
  return out;
}

bool numeric_point_independent(std::span<const Rat> point) {
  if (point.size() != 3) throw error("independence check is genus-1 only");
  const Rat d[4] = {Rat(-1), point[0] - point[1], point[0] - point[2],
                    point[1] - point[2]};
  for (unsigned subset = 1; subset < 16; ++subset) {
    Rat product(1);
    for (int k = 0; k < 4; ++k)
      if (subset & (1u << k)) product *= d[k];
    if (is_rational_square(product)) return false;
  }
  return true;
}

std::vector<std::array<Rat, 3>> independent_triples(int count,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-40, 40);
  std::vector<std::array<Rat, 3>> out;
  while (static_cast<int>(out.size()) < count) {
    std::array<Rat, 3> t = {Rat(dist(rng)), Rat(dist(rng)), Rat(dist(rng))};
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) continue;
    if (!numeric_point_independent(t)) continue;
    out.push_back(t);
  }
  return out;
}

VerificationReport verify_radical_independence(int genus, bool fault) {
  Stopwatch timer;
  VerificationReport report;
  report.command = "radical-independence";
  report.genus = genus;
  if (genus < 1 || genus > 2)
    throw error("radical independence check supports genus 1 and 2 only");

  const int m = 2 * genus + 1;
  std::vector<MultiPoly> differences;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      differences.push_back(MultiPoly::variable(m, i - 1) -
                            MultiPoly::variable(m, j - 1));

  const int n_diffs = static_cast<int>(differences.size());
  const unsigned long n_subsets = (1ul << n_diffs) - 1;
  unsigned long certified = 0, failed = 0;
  for (unsigned long subset = 1; subset <= n_subsets; ++subset) {
    MultiPoly product = MultiPoly::constant(m, Rat(1));
    for (int k = 0; k < n_diffs; ++k)
      if (subset & (1ul << k)) product = product * differences[k];
    if (fault && subset == 1) product = product * product;
    if (certified_nonsquare(product)) {
      ++certified;
    } else {
      ++failed;
      if (report.details.size() < 5)
        report.details.push_back("no non-square certificate for subset mask " +
                                 std::to_string(subset));
    }
  }

  report.expected = std::to_string(n_subsets) + " non-square subset products";
  report.computed = std::to_string(certified) + " certified, " +
                    std::to_string(failed) + " uncertified";
  report.passed = failed == 0;
  report.details.insert(
      report.details.begin(),
      "certifies [L2 : L1] = 2^" + std::to_string(n_diffs) + " = " +
          Int(Int(1) << n_diffs).get_str());
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

}  // namespace hyperjac
