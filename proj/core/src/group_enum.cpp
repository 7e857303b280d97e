#include "hyperjac/group_enum.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "hyperjac/braid.hpp"
#include "hyperjac/homology.hpp"

namespace hyperjac {

namespace {

std::string pack_entries(const std::uint8_t* e, std::size_t count, int bits) {
  std::string out((count * bits + 7) / 8, '\0');
  std::size_t pos = 0;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const std::uint8_t entry = e[idx];
    for (int b = 0; b < bits; ++b, ++pos)
      if ((entry >> b) & 1)
        out[pos / 8] = static_cast<char>(out[pos / 8] | (1 << (pos % 8)));
  }
  return out;
}

// G * M into scratch, entries already reduced.
void mul_into(std::vector<std::uint8_t>& scratch, const ModMatrix& g,
              const ModMatrix& m) {
  const int n = g.size();
  const std::uint8_t mask = g.modulus().mask();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      unsigned acc = 0;
      for (int k = 0; k < n; ++k)
        acc += static_cast<unsigned>(g.at(i, k)) * m.at(k, j);
      scratch[i * n + j] = static_cast<std::uint8_t>(acc & mask);
    }
}

ModMatrix from_entries(const std::vector<std::uint8_t>& e, int size,
                       Modulus mod) {
  ModMatrix m(size, mod);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) m.set(i, j, e[i * size + j]);
  return m;
}

std::vector<ModMatrix> reduced_pure_braid_reps(int genus, int level,
                                               bool fault) {
  const Modulus mod(level);
  std::vector<ModMatrix> gens;
  for (const BraidWord& w : all_pure_braid_generators(2 * genus + 1))
    gens.push_back(rep_word(w, genus, mod));
  if (fault && !gens.empty())
    gens[0].set(0, 0, static_cast<std::uint8_t>(gens[0].at(0, 0) + 1));
  return gens;
}

std::vector<ModMatrix> reduced_sigma_reps(int genus, int level, bool fault) {
  const Modulus mod(level);
  std::vector<ModMatrix> gens;
  for (int k = 1; k <= 2 * genus; ++k)
    gens.push_back(ModMatrix::reduce(rep_letter(k, genus), mod));
  if (fault && !gens.empty())
    gens[0].set(0, 0, static_cast<std::uint8_t>(gens[0].at(0, 0) + 1));
  return gens;
}

}  // namespace

bool GroupClosure::contains(const ModMatrix& m) const {
  return std::binary_search(elements.begin(), elements.end(), encode(m));
}

ModMatrix GroupClosure::element(std::size_t index) const {
  return decode(elements.at(index), 2 * genus, mod);
}

GroupClosure closure(const std::vector<ModMatrix>& generators,
                     std::size_t element_cap) {
  if (generators.empty()) throw error("closure: empty generator list");
  const int size = generators[0].size();
  const Modulus mod = generators[0].modulus();
  if (size % 2 != 0) throw error("closure: matrix size must be even");
  const int genus = size / 2;

  const ModMatrix form = ModMatrix::reduce(chain_form(genus), mod);
  const ModMatrix form_inv =
      ModMatrix::reduce(unimodular_inverse(chain_form(genus)), mod);

  // Deduplicated generator set, inverses included so the BFS explores the
  // group rather than a monoid.
  std::vector<ModMatrix> gens;
  {
    std::unordered_set<std::string> seen;
    for (const ModMatrix& g : generators) {
      if (g.size() != size || g.modulus() != mod)
        throw error("closure: generators disagree in size or modulus");
      if (!is_symplectic(g, form))
        throw error("closure: generator is not symplectic mod 2^n: " +
                    g.to_string());
      if (seen.insert(encode(g)).second) gens.push_back(g);
      const ModMatrix gi = symplectic_inverse(g, form, form_inv);
      if (seen.insert(encode(gi)).second) gens.push_back(gi);
    }
  }

  std::unordered_set<std::string> visited;
  std::vector<ModMatrix> queue;
  const ModMatrix id = ModMatrix::identity(size, mod);
  visited.insert(encode(id));
  queue.push_back(id);

  std::vector<std::uint8_t> scratch(size * size);
  const int bits = mod.exponent();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ModMatrix current = queue[head];
    for (const ModMatrix& g : gens) {
      mul_into(scratch, g, current);
      std::string key = pack_entries(scratch.data(), scratch.size(), bits);
      if (visited.insert(std::move(key)).second) {
        if (visited.size() > element_cap) throw closure_limit_error(element_cap);
        queue.push_back(from_entries(scratch, size, mod));
      }
    }
  }

  GroupClosure result;
  result.genus = genus;
  result.mod = mod;
  result.elements.assign(visited.begin(), visited.end());
  std::sort(result.elements.begin(), result.elements.end());

  const Int ambient = sp_group_order(genus, mod.exponent());
  if (ambient % result.order() != 0)
    throw consistency_error(
        "closure: order does not divide the symplectic group order");
  return result;
}

void write_closure_dump(const GroupClosure& c, std::ostream& os) {
  for (const std::string& e : c.elements) os << to_hex(e) << "\n";
}

LieAlgebraVector log_map(const ModMatrix& m) {
  if (m.modulus().exponent() < 2)
    throw error("log_map needs a matrix mod 4 or finer");
  const ModMatrix m4 = m.modulus().exponent() == 2
                           ? m
                           : ModMatrix::reduce(m.lift(), Modulus(2));
  if (congruence_level(m4) < 1)
    throw error("log_map: matrix is not congruent to I mod 2");

  const int n = m4.size();
  LieAlgebraVector v;
  v.size = n;
  v.bits.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::uint8_t want = (i == j) ? 1 : 0;
      const std::uint8_t dev = static_cast<std::uint8_t>((m4.at(i, j) - want) & 3);
      v.bits[i * n + j] = static_cast<std::uint8_t>(dev >> 1);
    }

  // Sanity: A^T E + E A = 0 mod 2 must hold for symplectic input.
  const SquareMatrix e = chain_form(n / 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Int acc(0);
      for (int k = 0; k < n; ++k)
        acc += Int(static_cast<long>(v.bits[k * n + i])) * e.at(k, j) +
               e.at(i, k) * Int(static_cast<long>(v.bits[k * n + j]));
      if (acc % 2 != 0)
        throw consistency_error("log_map image is not in the Lie algebra");
    }
  return v;
}

LieAlgebraVector lie_add(const LieAlgebraVector& a, const LieAlgebraVector& b) {
  if (a.size != b.size) throw error("lie_add: size mismatch");
  LieAlgebraVector out = a;
  for (std::size_t i = 0; i < out.bits.size(); ++i)
    out.bits[i] = static_cast<std::uint8_t>(out.bits[i] ^ b.bits[i]);
  return out;
}

int f2_rank(std::vector<std::vector<std::uint8_t>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < rows.size() && pivot_col < cols; ++pivot_col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][pivot_col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other == r || rows[other][pivot_col] == 0) continue;
      for (std::size_t c = pivot_col; c < cols; ++c)
        rows[other][c] = static_cast<std::uint8_t>(rows[other][c] ^ rows[r][c]);
    }
    ++r;
    ++rank;
  }
  return rank;
}

int gamma2mod4_rank(int genus) {
  std::vector<std::vector<std::uint8_t>> rows;
  for (const ModMatrix& g : reduced_pure_braid_reps(genus, 2, false))
    rows.push_back(log_map(g).bits);
  return f2_rank(std::move(rows));
}

int lie_solution_dimension(int genus) {
  const int n = 2 * genus;
  const SquareMatrix e = chain_form(genus);
  // Unknowns: entries of A (n^2 bits).  Equation (i, j):
  // sum_k A[k][i] E[k][j] + E[i][k] A[k][j] = 0 mod 2.
  std::vector<std::vector<std::uint8_t>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::uint8_t> row(n * n, 0);
      for (int k = 0; k < n; ++k) {
        const long eij = mpz_get_si(e.at(k, j).get_mpz_t());
        if (eij % 2 != 0) row[k * n + i] ^= 1;
        const long eik = mpz_get_si(e.at(i, k).get_mpz_t());
        if (eik % 2 != 0) row[k * n + j] ^= 1;
      }
      rows.push_back(std::move(row));
    }
  return n * n - f2_rank(std::move(rows));
}

GroupClosure theorem_level_closure(int genus, int level,
                                   std::size_t element_cap, bool fault) {
  if (level < 2) throw error("theorem check needs level >= 2");
  return closure(reduced_pure_braid_reps(genus, level, fault), element_cap);
}

VerificationReport verify_theorem_level(int genus, int level,
                                        std::size_t element_cap, bool fault) {
  Stopwatch timer;
  VerificationReport report =
      theorem_report_from_closure(theorem_level_closure(genus, level,
                                                        element_cap, fault),
                                  genus, level);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport theorem_report_from_closure(const GroupClosure& c,
                                               int genus, int level) {
  Stopwatch timer;
  VerificationReport report;
  report.command = "theorem";
  report.genus = genus;
  report.level = level;
  report.expected = gamma_quotient_order(genus, level).get_str() +
                    ", all elements = I mod 2";

  std::size_t below_level_1 = 0;
  for (std::size_t i = 0; i < c.elements.size(); ++i)
    if (congruence_level(c.element(i)) < 1) ++below_level_1;

  report.computed = c.order().get_str() + ", " +
                    std::to_string(below_level_1) + " elements != I mod 2";
  report.passed =
      c.order() == gamma_quotient_order(genus, level) && below_level_1 == 0;
  report.details.push_back(
      std::to_string(c.elements.size()) + " elements from " +
      std::to_string(genus * (2 * genus + 1)) + " pure-braid generators");
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport verify_mod2_quotient(int genus, std::size_t element_cap,
                                        bool fault) {
  Stopwatch timer;
  VerificationReport report;
  report.command = "mod2-quotient";
  report.genus = genus;
  report.level = 1;

  Int expected(1);
  for (int k = 2; k <= 2 * genus + 1; ++k) expected *= k;
  report.expected = expected.get_str() + " = (2g+1)!";

  const GroupClosure c = closure(reduced_sigma_reps(genus, 1, fault), element_cap);
  report.computed = c.order().get_str();
  report.passed = c.order() == expected;
  if (genus == 1) {
    const bool full = c.order() == sp_group_order(1, 1);
    report.details.push_back(
        std::string("g=1 image ") + (full ? "equals" : "differs from") +
        " the full symplectic group of order " + sp_group_order(1, 1).get_str());
    report.passed = report.passed && full;
  } else {
    report.details.push_back("ambient symplectic group order " +
                             sp_group_order(genus, 1).get_str());
  }
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport verify_g1_full_sp(int level, std::size_t element_cap,
                                     bool fault) {
  Stopwatch timer;
  VerificationReport report;
  report.command = "full-sp-g1";
  report.genus = 1;
  report.level = level;
  report.expected = sp_group_order(1, level).get_str();

  const GroupClosure c = closure(reduced_sigma_reps(1, level, fault), element_cap);
  report.computed = c.order().get_str();
  report.passed = c.order() == sp_group_order(1, level);
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

VerificationReport verify_mod4_rank(int genus, bool fault) {
  Stopwatch timer;
  VerificationReport report;
  report.command = "mod4-rank";
  report.genus = genus;
  report.level = 2;
  const int expected = 2 * genus * genus + genus;
  report.expected = std::to_string(expected) + " (= 2g^2+g), twice";

  int rank;
  if (fault) {
    std::vector<std::vector<std::uint8_t>> rows;
    for (const ModMatrix& g : reduced_pure_braid_reps(genus, 2, false))
      rows.push_back(log_map(g).bits);
    rows[0] = rows[1];  // collapse one generator to force a rank drop
    rank = f2_rank(std::move(rows));
  } else {
    rank = gamma2mod4_rank(genus);
  }
  const int dim = lie_solution_dimension(genus);

  report.computed = "generator rank " + std::to_string(rank) +
                    ", solution-space dimension " + std::to_string(dim);
  report.passed = rank == expected && dim == expected;
  report.details.push_back(
      std::to_string(genus * (2 * genus + 1)) +
      " log-mapped generators over F_2, matrix size " +
      std::to_string(2 * genus) + "x" + std::to_string(2 * genus));
  report.elapsed_ms = timer.elapsed_ms();
  return report;
}

}  // namespace hyperjac
