#include "hyperjac/ratfunc.hpp"

namespace hyperjac {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != den_.nvars()) throw error("variable count mismatch");
  if (den_.is_zero()) throw error("division by zero");
  normalize();
}

RationalFunction RationalFunction::constant(int nvars, const Rat& c) {
  return from_poly(MultiPoly::constant(nvars, c));
}

RationalFunction RationalFunction::variable(int nvars, int index) {
  return from_poly(MultiPoly::variable(nvars, index));
}

RationalFunction RationalFunction::from_poly(MultiPoly p) {
  RationalFunction r(p.nvars());
  r.num_ = std::move(p);
  return r;
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.nvars(), Rat(1));
    return;
  }
  if (!den_.is_constant()) {
    const MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
  }
  normalize_content_only();
}

void RationalFunction::normalize_content_only() {
  const Rat c = rational_content(den_);
  num_ = num_ * Rat(1 / c);
  den_ = den_ * Rat(1 / c);
}

RationalFunction RationalFunction::reduced(MultiPoly num, MultiPoly den) {
  RationalFunction out(num.nvars());
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  if (out.num_.is_zero()) {
    out.den_ = MultiPoly::constant(out.num_.nvars(), Rat(1));
    return out;
  }
  out.normalize_content_only();
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw error("inverse of zero");
  return reduced(den_, num_);  // a reduced fraction swaps to a reduced one
}

Rat RationalFunction::evaluate(std::span<const Rat> point) const {
  const Rat d = den_.evaluate(point);
  if (d == 0) throw error("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

// Reduced addition over a common-denominator gcd (Knuth 4.5.1): with
// g = gcd(d1, d2) and t the cross sum, the only factors shared by t and the
// common denominator divide g, so one small gcd finishes the reduction and
// every branch below yields a fraction already in lowest terms.
RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  const MultiPoly& n1 = a.num_;
  const MultiPoly& d1 = a.den_;
  const MultiPoly& n2 = b.num_;
  const MultiPoly& d2 = b.den_;
  if (n1.is_zero()) return b;
  if (n2.is_zero()) return a;

  if (d1.is_constant() || d2.is_constant())
    return RationalFunction::reduced(n1 * d2 + n2 * d1, d1 * d2);
  const MultiPoly g = poly_gcd(d1, d2);
  if (g.is_constant())
    return RationalFunction::reduced(n1 * d2 + n2 * d1, d1 * d2);

  const MultiPoly d2r = exact_divide(d2, g);
  const MultiPoly t = n1 * d2r + n2 * exact_divide(d1, g);
  if (t.is_zero()) return RationalFunction(d1.nvars());
  const MultiPoly h = poly_gcd(t, g);
  if (h.is_constant()) return RationalFunction::reduced(t, d1 * d2r);
  return RationalFunction::reduced(exact_divide(t, h),
                                   exact_divide(d1, h) * d2r);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  // Cross-cancel before multiplying; the four remaining parts are pairwise
  // coprime, so the product needs no further gcd.
  MultiPoly n1 = a.num_, d2 = b.den_;
  if (!n1.is_zero() && !d2.is_constant()) {
    const MultiPoly g = poly_gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = exact_divide(n1, g);
      d2 = exact_divide(d2, g);
    }
  }
  MultiPoly n2 = b.num_, d1 = a.den_;
  if (!n2.is_zero() && !d1.is_constant()) {
    const MultiPoly g = poly_gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = exact_divide(n2, g);
      d1 = exact_divide(d1, g);
    }
  }
  return RationalFunction::reduced(n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hyperjac
