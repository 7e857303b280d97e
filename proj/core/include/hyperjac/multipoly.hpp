#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hyperjac/errors.hpp"
#include "hyperjac/modmatrix.hpp"  // Int, Rat

namespace hyperjac {

/// Sparse multivariate polynomial over Q.  Terms are kept in descending
/// graded-lexicographic order (alpha_1 > alpha_2 > ...), no zero coefficients
/// are stored, so the representation is canonical.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rat, GrlexGreater>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw error("polynomial needs at least one variable");
  }
  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The coefficient of the constant term (zero polynomial gives 0).
  Rat constant_value() const;

  const TermMap& terms() const { return terms_; }
  void set_term(const Exponents& e, const Rat& c);

  int degree(int var) const;
  int total_degree() const;

  /// Leading term under grlex.
  const Exponents& leading_exponents() const;
  const Rat& leading_coefficient() const;

  MultiPoly derivative(int var) const;
  Rat evaluate(std::span<const Rat> point) const;

  /// Coefficient of var^power, as a polynomial with that variable cleared.
  MultiPoly coefficient_of(int var, int power) const;
  MultiPoly mul_by_power(int var, int power) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const Rat& c);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;  // default names a1, a2, ...

 private:
  int nvars_;
  TermMap terms_;
};

/// Positive rational c with p = c * q, q integer-primitive with positive
/// leading coefficient; p must be nonzero.
Rat rational_content(const MultiPoly& p);

/// p divided by its rational content: integer coefficients with gcd 1 and
/// positive leading coefficient.
MultiPoly primitive_part(const MultiPoly& p);

/// Quotient f / g when the division is exact; throws otherwise.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);
bool divides(const MultiPoly& g, const MultiPoly& f);

/// Primitive gcd with positive leading coefficient (primitive-PRS algorithm,
/// recursive over variables).  Constants count as units: gcd with a nonzero
/// constant is 1.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// True when c is the square of a rational.
bool is_rational_square(const Rat& c);

/// Sound one-sided certificate that nonzero p is not a square in Q(alpha):
/// some variable occurs to odd degree, or gcd(p, dp/dv) is too small in v.
/// Returns false when no certificate is found (in particular for squares).
bool certified_nonsquare(const MultiPoly& p, std::string* how = nullptr);

}  // namespace hyperjac
