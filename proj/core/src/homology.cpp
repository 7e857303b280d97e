#include "hyperjac/homology.hpp"

#include <sstream>

namespace hyperjac {

CycleVector chain_cycle(int genus, int i) {
  if (i < 1 || i > 2 * genus)
    throw error("chain cycle index out of range: " + std::to_string(i));
  CycleVector v(2 * genus, Int(0));
  v[i - 1] = 1;
  return v;
}

Int pairing(const CycleVector& x, const CycleVector& y,
            const SquareMatrix& form) {
  const int n = form.size();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw error("pairing: vector length does not match form size");
  Int acc(0);
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) acc += x[i] * form.at(i, j) * y[j];
  }
  return acc;
}

SquareMatrix transvection_matrix(const CycleVector& v,
                                 const SquareMatrix& form) {
  const int n = form.size();
  bool nonzero = false;
  for (const Int& c : v) nonzero = nonzero || c != 0;
  if (!nonzero) throw error("transvection along the zero vector");

  // (I - v v^T E) x = x + <x, v> v.
  SquareMatrix t = SquareMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      Int dot(0);
      for (int k = 0; k < n; ++k) dot += v[k] * form.at(k, j);
      t.at(i, j) -= v[i] * dot;
    }
  }
  return t;
}

SquareMatrix rep_letter(int letter, int genus) {
  const int k = letter > 0 ? letter : -letter;
  if (k < 1 || k > 2 * genus)
    throw error("generator index out of range for genus " +
                std::to_string(genus));
  const SquareMatrix form = chain_form(genus);
  const SquareMatrix t = transvection_matrix(chain_cycle(genus, k), form);
  if (letter > 0) return t;
  // T_v^{-1} = I + v v^T E = 2I - T_v, since (v v^T E)^2 = 0.
  SquareMatrix inv(2 * genus);
  for (int i = 0; i < 2 * genus; ++i)
    for (int j = 0; j < 2 * genus; ++j)
      inv.at(i, j) = (i == j ? 2 : 0) - t.at(i, j);
  return inv;
}

SquareMatrix rep_word(const BraidWord& w, int genus) {
  if (w.strands != 2 * genus + 1)
    throw error("word strand count does not match genus");
  SquareMatrix acc = SquareMatrix::identity(2 * genus);
  for (int l : w.letters) acc = mat_mul(acc, rep_letter(l, genus));
  return acc;
}

ModMatrix rep_word(const BraidWord& w, int genus, Modulus m) {
  if (w.strands != 2 * genus + 1)
    throw error("word strand count does not match genus");
  ModMatrix acc = ModMatrix::identity(2 * genus, m);
  std::vector<ModMatrix> letter_cache;
  letter_cache.reserve(4 * genus);
  for (int k = 1; k <= 2 * genus; ++k) {
    letter_cache.push_back(ModMatrix::reduce(rep_letter(k, genus), m));
    letter_cache.push_back(ModMatrix::reduce(rep_letter(-k, genus), m));
  }
  for (int l : w.letters) {
    const int k = l > 0 ? l : -l;
    acc = mat_mul(acc, letter_cache[2 * (k - 1) + (l > 0 ? 0 : 1)]);
  }
  return acc;
}

VerificationReport verify_braid_relations(int genus, bool fault) {
  Stopwatch timer;
  VerificationReport report;
  report.command = "braid-relations";
  report.genus = genus;

  const int gens = 2 * genus;
  std::vector<SquareMatrix> t;
  t.reserve(gens);
  for (int k = 1; k <= gens; ++k) t.push_back(rep_letter(k, genus));
  if (fault) t[0].at(0, 0) += 1;

  int checked = 0, failed = 0;
  for (int i = 0; i < gens; ++i)
    for (int j = i + 1; j < gens; ++j) {
      ++checked;
      bool ok;
      std::string name;
      if (j == i + 1) {
        ok = mat_mul(mat_mul(t[i], t[j]), t[i]) ==
             mat_mul(mat_mul(t[j], t[i]), t[j]);
        name = "s" + std::to_string(i + 1) + " s" + std::to_string(j + 1) +
               " s" + std::to_string(i + 1) + " = s" + std::to_string(j + 1) +
               " s" + std::to_string(i + 1) + " s" + std::to_string(j + 1);
      } else {
        ok = mat_mul(t[i], t[j]) == mat_mul(t[j], t[i]);
        name = "s" + std::to_string(i + 1) + " s" + std::to_string(j + 1) +
               " = s" + std::to_string(j + 1) + " s" + std::to_string(i + 1);
      }
      if (!ok) {
        ++failed;
        report.details.push_back("violated: " + name);
      }
    }

  report.expected = std::to_string(checked) + " relations hold";
  report.computed = failed == 0
                        ? "all " + std::to_string(checked) + " hold"
                        : std::to_string(failed) + " violated";
  report.passed = failed == 0;
  report.details.insert(report.details.begin(),
                        std::to_string(gens - 1) + " braid relations, " +
                            std::to_string(checked - (gens - 1)) +
                            " commuting pairs");
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport purity_mod2_property(int genus, int samples,
                                        std::uint64_t seed, bool fault) {
  Stopwatch timer;
  VerificationReport report;
  report.command = "purity";
  report.genus = genus;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  const Modulus mod2(1);
  int counterexamples = 0;
  for (int s = 0; s < samples; ++s) {
    BraidWord w = random_word(2 * genus + 1, 40, rng);
    ModMatrix m = rep_word(w, genus, mod2);
    if (fault && s == 0) m.set(0, 0, m.at(0, 0) ^ 1u);
    const bool pure = is_pure(w);
    const bool trivial_mod2 = m.is_identity();
    if (pure != trivial_mod2) {
      ++counterexamples;
      if (report.details.size() < 5)
        report.details.push_back("counterexample: " + format_word(w));
    }
  }

  report.expected = "0 counterexamples in " + std::to_string(samples);
  report.computed = std::to_string(counterexamples) + " counterexamples";
  report.passed = counterexamples == 0;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport symplectic_sample_property(int genus, int samples,
                                              std::uint64_t seed) {
  Stopwatch timer;
  VerificationReport report;
  report.command = "symplectic-sample";
  report.genus = genus;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  const SquareMatrix form = chain_form(genus);
  int violations = 0;
  for (int s = 0; s < samples; ++s) {
    BraidWord w = random_word(2 * genus + 1, 40, rng);
    if (!is_symplectic(rep_word(w, genus), form)) {
      ++violations;
      if (report.details.size() < 5)
        report.details.push_back("form not preserved: " + format_word(w));
    }
  }

  report.expected = "form preserved for all " + std::to_string(samples);
  report.computed = std::to_string(violations) + " violations";
  report.passed = violations == 0;
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

}  // namespace hyperjac
