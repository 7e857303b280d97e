#pragma once

#include <span>
#include <string>

#include "hyperjac/multipoly.hpp"

namespace hyperjac {

/// Element of Q(alpha_1, ..., alpha_k), stored as a reduced fraction:
/// gcd(num, den) = 1 and den integer-primitive with positive grlex leading
/// coefficient, so equal elements have equal representations.
class RationalFunction {
 public:
  explicit RationalFunction(int nvars)
      : num_(nvars), den_(MultiPoly::constant(nvars, Rat(1))) {}
  RationalFunction(MultiPoly num, MultiPoly den);

  static RationalFunction constant(int nvars, const Rat& c);
  static RationalFunction variable(int nvars, int index);
  static RationalFunction from_poly(MultiPoly p);

  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }

  RationalFunction inverse() const;
  Rat evaluate(std::span<const Rat> point) const;

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  void normalize_content_only();
  /// Builds a fraction whose parts are already coprime, skipping the gcd.
  static RationalFunction reduced(MultiPoly num, MultiPoly den);

  MultiPoly num_, den_;
};

}  // namespace hyperjac
