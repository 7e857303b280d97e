#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperjac/modmatrix.hpp"
#include "hyperjac/report.hpp"

namespace hyperjac {

inline constexpr std::size_t kDefaultElementCap = 4000000;

/// A finite matrix group mod 2^n, stored as the sorted list of canonical
/// encodings of its elements.
struct GroupClosure {
  int genus = 0;
  Modulus mod{1};
  std::vector<std::string> elements;  // sorted; one encoding per element

  Int order() const { return Int(static_cast<unsigned long>(elements.size())); }
  bool contains(const ModMatrix& m) const;
  ModMatrix element(std::size_t index) const;
};

/// Breadth-first closure of the generated group under left-multiplication by
/// the generators and their inverses.  Every generator must be symplectic for
/// the chain form mod 2^n.  The final element set does not depend on
/// generator order.  Throws closure_limit_error when the cap is hit; a
/// truncated set is never returned.  A Lagrange divisibility check against
/// sp_group_order runs on every call.
GroupClosure closure(const std::vector<ModMatrix>& generators,
                     std::size_t element_cap = kDefaultElementCap);

/// One hex-encoded element per line, sorted; two runs over the same group
/// produce identical bytes.
void write_closure_dump(const GroupClosure& c, std::ostream& os);

/// F_2 matrix A = (M - I)/2 mod 2 for M in Gamma(2) mod 4; satisfies
/// A^T E + E A = 0 mod 2.
struct LieAlgebraVector {
  int size = 0;                   // 2g
  std::vector<std::uint8_t> bits; // row-major 0/1 entries

  friend bool operator==(const LieAlgebraVector& a,
                         const LieAlgebraVector& b) = default;
};

LieAlgebraVector log_map(const ModMatrix& m);
LieAlgebraVector lie_add(const LieAlgebraVector& a, const LieAlgebraVector& b);

/// Rank of a set of F_2 row vectors by Gaussian elimination.
int f2_rank(std::vector<std::vector<std::uint8_t>> rows);

/// F_2-rank of the log images of all rep(A_ij) mod 4.
int gamma2mod4_rank(int genus);

/// Dimension of {A over F_2 : A^T E + E A = 0}, computed by linear algebra
/// alone (no braid input); equals g(2g+1).
int lie_solution_dimension(int genus);

// --- packaged verifications --------------------------------------------------

/// Image of the pure braid group mod 2^n: closure of {rep(A_ij) mod 2^n} must
/// have order 2^((n-1)g(2g+1)) with every element congruent to I mod 2.
VerificationReport verify_theorem_level(int genus, int level,
                                        std::size_t element_cap = kDefaultElementCap,
                                        bool fault = false);

/// Closure of {rep(sigma_i) mod 2} has order (2g+1)!; for g = 1 this equals
/// the full symplectic group order.
VerificationReport verify_mod2_quotient(int genus,
                                        std::size_t element_cap = kDefaultElementCap,
                                        bool fault = false);

/// Genus 1: closure of {T_1, T_2 mod 2^n} has order sp_group_order(1, n).
VerificationReport verify_g1_full_sp(int level,
                                     std::size_t element_cap = kDefaultElementCap,
                                     bool fault = false);

/// Rank of the log-mapped pure-braid generators plus the independent
/// solution-space dimension; both must equal 2g^2 + g.
VerificationReport verify_mod4_rank(int genus, bool fault = false);

/// Closure of {rep(A_ij) mod 2^n}; the raw object behind verify_theorem_level,
/// exposed so the CLI can dump element encodings without a second BFS.
GroupClosure theorem_level_closure(int genus, int level,
                                   std::size_t element_cap = kDefaultElementCap,
                                   bool fault = false);
VerificationReport theorem_report_from_closure(const GroupClosure& c,
                                               int genus, int level);

}  // namespace hyperjac
