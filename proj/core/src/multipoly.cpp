#include "hyperjac/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace hyperjac {

bool MultiPoly::GrlexGreater::operator()(const Exponents& a,
                                         const Exponents& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return a > b;  // lexicographic, alpha_1 most significant
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw error("variable index out of range: " + std::to_string(index));
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

Rat MultiPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

void MultiPoly::set_term(const Exponents& e, const Rat& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw error("exponent vector length mismatch");
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

int MultiPoly::degree(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

const MultiPoly::Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw error("leading term of the zero polynomial");
  return terms_.begin()->first;
}

const Rat& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw error("leading term of the zero polynomial");
  return terms_.begin()->second;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.terms_[d] += c * static_cast<long>(e[var]);
    auto it = out.terms_.find(d);
    if (it->second == 0) out.terms_.erase(it);
  }
  return out;
}

Rat MultiPoly::evaluate(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw error("evaluation point has wrong dimension");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int v = 0; v < nvars_; ++v)
      for (unsigned k = 0; k < e[v]; ++k) term *= point[v];
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::coefficient_of(int var, int power) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(e[var]) != power) continue;
    Exponents d = e;
    d[var] = 0;
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

MultiPoly MultiPoly::mul_by_power(int var, int power) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d[var] += static_cast<unsigned>(power);
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw error("variable count mismatch");
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = out.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw error("variable count mismatch");
  MultiPoly out(a.nvars_);
  MultiPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
      auto [it, inserted] = out.terms_.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

MultiPoly operator*(const MultiPoly& a, const Rat& c) {
  if (c == 0) return MultiPoly(a.nvars_);
  MultiPoly out = a;
  for (auto& [e, coef] : out.terms_) coef *= c;
  return out;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat abs_c = c > 0 ? c : Rat(-c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool has_vars =
        std::any_of(e.begin(), e.end(), [](unsigned x) { return x != 0; });
    if (abs_c != 1 || !has_vars) {
      os << abs_c.get_str();
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << names[v];
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

std::string MultiPoly::to_string() const {
  std::vector<std::string> names;
  for (int v = 0; v < nvars_; ++v) names.push_back("a" + std::to_string(v + 1));
  return to_string(names);
}

Rat rational_content(const MultiPoly& p) {
  if (p.is_zero()) throw error("content of the zero polynomial");
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (p.leading_coefficient() < 0) content = -content;
  return content;
}

MultiPoly primitive_part(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const Rat c = rational_content(p);
  return p * Rat(1 / c);
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw error("division by the zero polynomial");
  if (f.nvars() != g.nvars()) throw error("variable count mismatch");
  MultiPoly q(f.nvars());
  MultiPoly r = f;
  const auto& glead = g.leading_exponents();
  const Rat& gcoef = g.leading_coefficient();
  while (!r.is_zero()) {
    const auto& rlead = r.leading_exponents();
    MultiPoly::Exponents quot(f.nvars());
    for (int v = 0; v < f.nvars(); ++v) {
      if (rlead[v] < glead[v]) throw error("exact_divide: not divisible");
      quot[v] = rlead[v] - glead[v];
    }
    const Rat qc = r.leading_coefficient() / gcoef;
    MultiPoly term(f.nvars());
    term.set_term(quot, qc);
    q = q + term;
    r = r - term * g;
  }
  return q;
}

bool divides(const MultiPoly& g, const MultiPoly& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  try {
    exact_divide(f, g);
    return true;
  } catch (const error&) {
    return false;
  }
}

namespace {

// Canonical pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g in `var`.
// The full power matters; the subresultant divisions are exact only for it.
MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, int var) {
  const int dg = g.degree(var);
  const MultiPoly glc = g.coefficient_of(var, dg);
  const int want = f.degree(var) - dg + 1;
  MultiPoly r = f;
  int steps = 0;
  while (!r.is_zero()) {
    const int dr = r.degree(var);
    if (dr < dg) break;
    const MultiPoly rlc = r.coefficient_of(var, dr);
    r = r * glc - rlc.mul_by_power(var, dr - dg) * g;
    ++steps;
  }
  for (; !r.is_zero() && steps < want; ++steps) r = r * glc;
  return r;
}

// Gcd of the var-coefficients of p; does not involve var.
MultiPoly content_in_var(const MultiPoly& p, int var) {
  MultiPoly c(p.nvars());
  for (int k = 0; k <= p.degree(var); ++k) {
    const MultiPoly coeff = p.coefficient_of(var, k);
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? primitive_part(coeff) : poly_gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

MultiPoly poly_pow(const MultiPoly& p, int e) {
  MultiPoly acc = MultiPoly::constant(p.nvars(), Rat(1));
  for (int i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

// Univariate image of an integer polynomial in `var` at a random point mod
// p, as dense coefficients.  Returns false if a rational coefficient
// denominator vanishes mod p (caller retries elsewhere).
bool univariate_image(const MultiPoly& f, int var,
                      const std::vector<unsigned long>& point,
                      unsigned long p, std::vector<unsigned long>& out) {
  out.assign(f.degree(var) + 1, 0);
  for (const auto& [e, c] : f.terms()) {
    const unsigned long den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
    if (den == 0) return false;
    unsigned long v = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
    // multiply by den^(p-2) mod p (Fermat inverse)
    unsigned long inv = 1, base = den, exp = p - 2;
    while (exp) {
      if (exp & 1) inv = (unsigned long)(((unsigned __int128)inv * base) % p);
      base = (unsigned long)(((unsigned __int128)base * base) % p);
      exp >>= 1;
    }
    v = (unsigned long)(((unsigned __int128)v * inv) % p);
    for (int w = 0; w < f.nvars(); ++w) {
      if (w == var) continue;
      for (unsigned k = 0; k < e[w]; ++k)
        v = (unsigned long)(((unsigned __int128)v * point[w]) % p);
    }
    out[e[var]] = (out[e[var]] + v) % p;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return true;
}

// Sound fast path: if the leading coefficients survive a specialization of
// the other variables and the univariate images are coprime mod p, then the
// gcd has degree 0 in `var`.
bool coprime_in_var_by_specialization(const MultiPoly& f, const MultiPoly& g,
                                      int var) {
  constexpr unsigned long p = 1000003;
  std::mt19937_64 rng(0x5eedu + static_cast<unsigned>(var));
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<unsigned long> point(f.nvars());
    for (auto& x : point) x = 1 + rng() % (p - 1);
    std::vector<unsigned long> fu, gu;
    if (!univariate_image(f, var, point, p, fu)) continue;
    if (!univariate_image(g, var, point, p, gu)) continue;
    if (static_cast<int>(fu.size()) - 1 != f.degree(var)) continue;
    if (static_cast<int>(gu.size()) - 1 != g.degree(var)) continue;
    // Euclid over F_p.
    std::vector<unsigned long> a = fu, b = gu;
    while (b.size() > 1 || (b.size() == 1 && b[0] != 0)) {
      if (a.size() < b.size()) {
        std::swap(a, b);
        continue;
      }
      // a -= lc(a)/lc(b) * x^(da-db) * b
      unsigned long lcb = b.back(), inv = 1, base = lcb, exp = p - 2;
      while (exp) {
        if (exp & 1) inv = (unsigned long)(((unsigned __int128)inv * base) % p);
        base = (unsigned long)(((unsigned __int128)base * base) % p);
        exp >>= 1;
      }
      const unsigned long q =
          (unsigned long)(((unsigned __int128)a.back() * inv) % p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        const unsigned long sub =
            (unsigned long)(((unsigned __int128)q * b[i]) % p);
        a[shift + i] = (a[shift + i] + p - sub) % p;
      }
      while (a.size() > 1 && a.back() == 0) a.pop_back();
      std::swap(a, b);
    }
    if (a.size() == 1 && a[0] != 0) return true;  // gcd of images is constant
  }
  return false;
}

// Subresultant polynomial remainder sequence in `var` for polynomials that
// are primitive with respect to it; returns the primitive gcd part in var.
MultiPoly subresultant_gcd(MultiPoly f, MultiPoly g, int var) {
  const int nvars = f.nvars();
  if (f.degree(var) < g.degree(var)) std::swap(f, g);

  int delta = f.degree(var) - g.degree(var);
  MultiPoly beta =
      MultiPoly::constant(nvars, Rat(delta % 2 == 0 ? -1 : 1));  // (-1)^(d+1)
  MultiPoly psi = MultiPoly::constant(nvars, Rat(-1));

  for (;;) {
    const MultiPoly r = pseudo_remainder(f, g, var);
    if (r.is_zero()) break;
    const MultiPoly reduced = exact_divide(r, beta);
    if (reduced.degree(var) == 0)
      return MultiPoly::constant(nvars, Rat(1));  // var-free remainder

    const MultiPoly lc_g = g.coefficient_of(var, g.degree(var));
    if (delta == 0)
      ;  // psi unchanged
    else if (delta == 1)
      psi = -lc_g;
    else
      psi = exact_divide(poly_pow(-lc_g, delta), poly_pow(psi, delta - 1));

    f = g;
    g = reduced;
    delta = f.degree(var) - g.degree(var);
    beta = -lc_g * poly_pow(psi, delta);
  }
  return exact_divide(g, content_in_var(g, var));
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw error("variable count mismatch");
  const int nvars = a.nvars();
  if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant())
    return MultiPoly::constant(nvars, Rat(1));

  // Factor out the largest common monomial first.
  MultiPoly::Exponents common(nvars, 0);
  {
    MultiPoly::Exponents min_a(nvars, ~0u), min_b(nvars, ~0u);
    for (const auto& [e, c] : a.terms())
      for (int v = 0; v < nvars; ++v) min_a[v] = std::min(min_a[v], e[v]);
    for (const auto& [e, c] : b.terms())
      for (int v = 0; v < nvars; ++v) min_b[v] = std::min(min_b[v], e[v]);
    for (int v = 0; v < nvars; ++v) common[v] = std::min(min_a[v], min_b[v]);
  }
  const bool has_common_monomial =
      std::any_of(common.begin(), common.end(), [](unsigned e) { return e > 0; });
  if (has_common_monomial) {
    MultiPoly monomial(nvars);
    monomial.set_term(common, Rat(1));
    return primitive_part(monomial *
                          poly_gcd(exact_divide(a, monomial),
                                   exact_divide(b, monomial)));
  }

  int var = -1;
  for (int v = 0; v < nvars; ++v)
    if (a.degree(v) > 0 || b.degree(v) > 0) {
      var = v;
      break;
    }
  if (var < 0) return MultiPoly::constant(nvars, Rat(1));

  if (a.degree(var) == 0) return poly_gcd(a, content_in_var(b, var));
  if (b.degree(var) == 0) return poly_gcd(content_in_var(a, var), b);

  if (coprime_in_var_by_specialization(a, b, var))
    return primitive_part(
        poly_gcd(content_in_var(a, var), content_in_var(b, var)));

  const MultiPoly ca = content_in_var(a, var);
  const MultiPoly cb = content_in_var(b, var);
  const MultiPoly c = poly_gcd(ca, cb);

  const MultiPoly f = exact_divide(a, ca);
  const MultiPoly g = exact_divide(b, cb);
  return primitive_part(c * subresultant_gcd(f, g, var));
}

bool is_rational_square(const Rat& c) {
  if (c < 0) return false;
  if (c == 0) return true;
  return mpz_perfect_square_p(c.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(c.get_den().get_mpz_t());
}

bool certified_nonsquare(const MultiPoly& p, std::string* how) {
  if (p.is_zero()) return false;
  if (p.is_constant()) {
    const bool cert = !is_rational_square(p.constant_value());
    if (cert && how) *how = "constant is not a rational square";
    return cert;
  }
  for (int v = 0; v < p.nvars(); ++v) {
    const int d = p.degree(v);
    if (d == 0) continue;
    if (d % 2 == 1) {
      if (how)
        *how = "odd degree " + std::to_string(d) + " in a" + std::to_string(v + 1);
      return true;
    }
    const MultiPoly g = poly_gcd(p, p.derivative(v));
    if (2 * g.degree(v) < d) {
      if (how)
        *how = "gcd with d/da" + std::to_string(v + 1) + " has degree " +
               std::to_string(g.degree(v)) + " < " + std::to_string(d) + "/2";
      return true;
    }
  }
  return false;
}

}  // namespace hyperjac
