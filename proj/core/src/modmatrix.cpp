#include "hyperjac/modmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace hyperjac {

namespace {

Int reduce_entry(const Int& v, Modulus m) {
  Int r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), m.exponent());
  return r;
}

void require_same_size(int a, int b) {
  if (a != b)
    throw error("matrix size mismatch: " + std::to_string(a) + " vs " +
                std::to_string(b));
}

}  // namespace

SquareMatrix SquareMatrix::identity(int size) {
  SquareMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

SquareMatrix SquareMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  const int n = static_cast<int>(rows.size());
  SquareMatrix m(n);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw error("from_rows: ragged row in matrix literal");
    int c = 0;
    for (long v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

bool SquareMatrix::is_identity() const {
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::string SquareMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < size_; ++r) {
    os << (r ? ", [" : "[");
    for (int c = 0; c < size_; ++c) os << (c ? "," : "") << at(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

ModMatrix ModMatrix::identity(int size, Modulus m) {
  ModMatrix r(size, m);
  for (int i = 0; i < size; ++i) r.set(i, i, 1);
  return r;
}

ModMatrix ModMatrix::reduce(const SquareMatrix& a, Modulus m) {
  ModMatrix r(a.size(), m);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      r.set(i, j, static_cast<std::uint8_t>(
                      reduce_entry(a.at(i, j), m).get_ui()));
  return r;
}

SquareMatrix ModMatrix::lift() const {
  SquareMatrix r(size_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) r.at(i, j) = at(i, j);
  return r;
}

bool ModMatrix::is_identity() const {
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::string ModMatrix::to_string() const { return lift().to_string(); }

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_size(a.size(), b.size());
  const int n = a.size();
  SquareMatrix out(n);
  Int acc;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      acc = 0;
      for (int k = 0; k < n; ++k)
        mpz_addmul(acc.get_mpz_t(), a.at(i, k).get_mpz_t(),
                   b.at(k, j).get_mpz_t());
      out.at(i, j) = acc;
    }
  return out;
}

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b, Modulus m) {
  return reduce(mat_mul(a, b), m);
}

SquareMatrix mat_add(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_size(a.size(), b.size());
  SquareMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
  return out;
}

SquareMatrix transpose(const SquareMatrix& a) {
  SquareMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) out.at(i, j) = a.at(j, i);
  return out;
}

SquareMatrix reduce(const SquareMatrix& a, Modulus m) {
  SquareMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) out.at(i, j) = reduce_entry(a.at(i, j), m);
  return out;
}

Int determinant(const SquareMatrix& a) {
  // Bareiss fraction-free elimination; all divisions are exact.
  const int n = a.size();
  std::vector<Int> m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = a.at(i, j);

  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r * n + k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Int(0);
      for (int c = 0; c < n; ++c) std::swap(m[k * n + c], m[pivot * n + c]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(m[i * n + j].get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = m[k * n + k];
  }
  return sign > 0 ? m[n * n - 1] : Int(-m[n * n - 1]);
}

SquareMatrix unimodular_inverse(const SquareMatrix& a) {
  // Gauss-Jordan over Q; the result must come out integral.
  const int n = a.size();
  std::vector<Rat> m(n * 2 * n);
  auto at = [&](int r, int c) -> Rat& { return m[r * 2 * n + c]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = Rat(a.at(i, j));
    at(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw consistency_error("unimodular_inverse: singular matrix");
    if (pivot != col)
      for (int c = 0; c < 2 * n; ++c) std::swap(at(pivot, c), at(col, c));
    const Rat inv_p = 1 / at(col, col);
    for (int c = 0; c < 2 * n; ++c) at(col, c) *= inv_p;
    for (int r = 0; r < n; ++r) {
      if (r == col || at(r, col) == 0) continue;
      const Rat f = at(r, col);
      for (int c = 0; c < 2 * n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  SquareMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = at(i, j + n);
      v.canonicalize();
      if (v.get_den() != 1)
        throw consistency_error("unimodular_inverse: non-integral inverse");
      out.at(i, j) = v.get_num();
    }
  return out;
}

SquareMatrix chain_form(int genus) {
  if (genus < 1) throw error("genus must be positive");
  const int n = 2 * genus;
  SquareMatrix e(n);
  for (int i = 0; i + 1 < n; ++i) {
    e.at(i, i + 1) = 1;
    e.at(i + 1, i) = -1;
  }
  return e;
}

SquareMatrix standard_form(int genus) {
  if (genus < 1) throw error("genus must be positive");
  const int g = genus;
  SquareMatrix j(2 * g);
  for (int i = 0; i < g; ++i) {
    j.at(i, g + i) = 1;
    j.at(g + i, i) = -1;
  }
  return j;
}

SquareMatrix chain_to_standard_base_change(int genus) {
  const int n = 2 * genus;
  const SquareMatrix e = chain_form(genus);

  auto pair = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
    Int acc(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc += x[i] * e.at(i, j) * y[j];
    return acc;
  };

  std::vector<std::vector<Int>> pool;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> v(n, Int(0));
    v[i] = 1;
    pool.push_back(v);
  }

  std::vector<std::vector<Int>> us, vs;
  while (!pool.empty()) {
    std::vector<Int> u = pool.front();
    pool.erase(pool.begin());
    int partner = -1;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      Int p = pair(u, pool[k]);
      if (p == 1 || p == -1) {
        partner = static_cast<int>(k);
        break;
      }
    }
    if (partner < 0)
      throw consistency_error(
          "symplectic base change: no unimodular partner found");
    std::vector<Int> v = pool[partner];
    pool.erase(pool.begin() + partner);
    if (pair(u, v) == -1)
      for (auto& c : v) c = -c;

    // Remove the span of (u, v) from the rest of the pool.
    for (auto& w : pool) {
      const Int a = pair(w, v), b = pair(w, u);
      for (int i = 0; i < n; ++i) w[i] = w[i] - a * u[i] + b * v[i];
    }
    us.push_back(u);
    vs.push_back(v);
  }

  SquareMatrix p(n);
  for (int col = 0; col < genus; ++col)
    for (int row = 0; row < n; ++row) {
      p.at(row, col) = us[col][row];
      p.at(row, genus + col) = vs[col][row];
    }
  return p;
}

bool is_symplectic(const SquareMatrix& m, const SquareMatrix& form) {
  require_same_size(m.size(), form.size());
  return mat_mul(mat_mul(transpose(m), form), m) == form;
}

bool is_symplectic(const SquareMatrix& m, const SquareMatrix& form,
                   Modulus mod) {
  require_same_size(m.size(), form.size());
  return reduce(mat_mul(mat_mul(transpose(m), form), m), mod) ==
         reduce(form, mod);
}

bool is_symplectic(const ModMatrix& m, const ModMatrix& form) {
  require_same_size(m.size(), form.size());
  if (m.modulus() != form.modulus())
    throw error("modulus mismatch in is_symplectic");
  return is_symplectic(m.lift(), form.lift(), m.modulus());
}

SquareMatrix symplectic_inverse(const SquareMatrix& m,
                                const SquareMatrix& form) {
  if (!is_symplectic(m, form))
    throw error("symplectic_inverse: input is not symplectic for this form");
  return mat_mul(mat_mul(unimodular_inverse(form), transpose(m)), form);
}

SquareMatrix symplectic_inverse(const SquareMatrix& m, const SquareMatrix& form,
                                Modulus mod) {
  if (!is_symplectic(m, form, mod))
    throw error(
        "symplectic_inverse: input is not symplectic for this form mod 2^n");
  return reduce(mat_mul(mat_mul(unimodular_inverse(form), transpose(m)), form),
                mod);
}

ModMatrix symplectic_inverse(const ModMatrix& m, const ModMatrix& form,
                             const ModMatrix& form_inverse) {
  const int n = m.size();
  ModMatrix mt(n, m.modulus());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mt.set(i, j, m.at(j, i));
  ModMatrix out = mat_mul(mat_mul(form_inverse, mt), form);
  if (!mat_mul(m, out).is_identity())
    throw error("symplectic_inverse: residue input is not symplectic");
  return out;
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b) {
  require_same_size(a.size(), b.size());
  if (a.modulus() != b.modulus()) throw error("modulus mismatch in mat_mul");
  const int n = a.size();
  const std::uint8_t mask = a.modulus().mask();
  ModMatrix out(n, a.modulus());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      unsigned acc = 0;
      for (int k = 0; k < n; ++k)
        acc += static_cast<unsigned>(a.at(i, k)) * b.at(k, j);
      out.set(i, j, static_cast<std::uint8_t>(acc & mask));
    }
  return out;
}

int congruence_level(const ModMatrix& m) {
  const int n = m.modulus().exponent();
  int level = n;
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) {
      const std::uint8_t want = (r == c) ? 1 : 0;
      const std::uint8_t dev =
          static_cast<std::uint8_t>((m.at(r, c) - want) & m.modulus().mask());
      if (dev == 0) continue;
      int v = 0;
      while (((dev >> v) & 1) == 0) ++v;
      level = std::min(level, v);
    }
  return level;
}

int congruence_level(const SquareMatrix& m, Modulus mod) {
  return congruence_level(ModMatrix::reduce(m, mod));
}

std::string encode(const ModMatrix& m) {
  const int n = m.modulus().exponent();
  const std::size_t total_bits =
      static_cast<std::size_t>(m.size()) * m.size() * n;
  std::string out((total_bits + 7) / 8, '\0');
  std::size_t pos = 0;
  for (std::uint8_t entry : m.e_) {
    for (int b = 0; b < n; ++b, ++pos)
      if ((entry >> b) & 1)
        out[pos / 8] = static_cast<char>(out[pos / 8] | (1 << (pos % 8)));
  }
  return out;
}

ModMatrix decode(const std::string& bytes, int size, Modulus m) {
  const int n = m.exponent();
  const std::size_t total_bits = static_cast<std::size_t>(size) * size * n;
  if (bytes.size() != (total_bits + 7) / 8)
    throw error("decode: byte string has wrong length");
  ModMatrix out(size, m);
  std::size_t pos = 0;
  for (auto& entry : out.e_) {
    std::uint8_t v = 0;
    for (int b = 0; b < n; ++b, ++pos)
      if ((static_cast<unsigned char>(bytes[pos / 8]) >> (pos % 8)) & 1)
        v = static_cast<std::uint8_t>(v | (1 << b));
    entry = v;
  }
  return out;
}

std::string to_hex(const std::string& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

Int sp_group_order(int genus, int level) {
  if (genus < 1 || level < 1) throw error("sp_group_order: g, n must be >= 1");
  Int order(1);
  mpz_mul_2exp(order.get_mpz_t(), order.get_mpz_t(), genus * genus);
  for (int i = 1; i <= genus; ++i) {
    Int factor(1);
    mpz_mul_2exp(factor.get_mpz_t(), factor.get_mpz_t(), 2 * i);
    factor -= 1;
    order *= factor;
  }
  return order * gamma_quotient_order(genus, level);
}

Int gamma_quotient_order(int genus, int level) {
  if (genus < 1 || level < 1)
    throw error("gamma_quotient_order: g, n must be >= 1");
  Int order(1);
  const unsigned long bits =
      static_cast<unsigned long>(level - 1) * genus * (2 * genus + 1);
  mpz_mul_2exp(order.get_mpz_t(), order.get_mpz_t(), bits);
  return order;
}

}  // namespace hyperjac
