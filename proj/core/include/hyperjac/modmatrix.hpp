#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hyperjac/errors.hpp"

namespace hyperjac {

using Int = mpz_class;
using Rat = mpq_class;

/// Power-of-two modulus 2^n.  Levels above 6 are rejected: nothing in the
/// toolkit needs them and the cap keeps packed encodings at one byte per
/// entry.
class Modulus {
 public:
  static constexpr int kMaxExponent = 6;

  explicit Modulus(int n) : n_(n) {
    if (n < 1 || n > kMaxExponent)
      throw error("modulus exponent must be in [1, 6], got " +
                  std::to_string(n));
  }

  int exponent() const { return n_; }
  std::uint32_t value() const { return 1u << n_; }
  std::uint8_t mask() const { return static_cast<std::uint8_t>(value() - 1); }

  friend bool operator==(Modulus a, Modulus b) { return a.n_ == b.n_; }
  friend bool operator!=(Modulus a, Modulus b) { return a.n_ != b.n_; }

 private:
  int n_;
};

/// Dense square matrix with exact arbitrary-precision integer entries.
/// Braid words of moderate length already overflow 64-bit entries, so the
/// unreduced representation is always mpz-backed.
class SquareMatrix {
 public:
  explicit SquareMatrix(int size) : size_(size), e_(size * size, Int(0)) {
    if (size <= 0) throw error("matrix size must be positive");
  }

  static SquareMatrix identity(int size);
  /// Rows given as an initializer list of initializer lists of longs; used
  /// mostly by tests for frozen values.
  static SquareMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);

  int size() const { return size_; }
  const Int& at(int r, int c) const { return e_[r * size_ + c]; }
  Int& at(int r, int c) { return e_[r * size_ + c]; }

  bool is_identity() const;
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.size_ == b.size_ && a.e_ == b.e_;
  }

  std::string to_string() const;

 private:
  int size_;
  std::vector<Int> e_;
};

/// Square matrix with entries reduced into [0, 2^n); the representation used
/// by the closure enumeration, one byte per entry.
class ModMatrix {
 public:
  ModMatrix(int size, Modulus m)
      : size_(size), mod_(m), e_(size * size, 0) {
    if (size <= 0) throw error("matrix size must be positive");
  }

  static ModMatrix identity(int size, Modulus m);
  static ModMatrix reduce(const SquareMatrix& a, Modulus m);

  int size() const { return size_; }
  Modulus modulus() const { return mod_; }
  std::uint8_t at(int r, int c) const { return e_[r * size_ + c]; }
  void set(int r, int c, std::uint8_t v) {
    e_[r * size_ + c] = static_cast<std::uint8_t>(v & mod_.mask());
  }

  /// Lift to an exact matrix with entries in [0, 2^n).
  SquareMatrix lift() const;

  bool is_identity() const;
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.size_ == b.size_ && a.mod_ == b.mod_ && a.e_ == b.e_;
  }

  std::string to_string() const;

 private:
  friend std::string encode(const ModMatrix&);
  friend ModMatrix decode(const std::string&, int, Modulus);

  int size_;
  Modulus mod_;
  std::vector<std::uint8_t> e_;
};

// --- exact arithmetic ------------------------------------------------------

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b, Modulus m);
SquareMatrix mat_add(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix transpose(const SquareMatrix& a);
SquareMatrix reduce(const SquareMatrix& a, Modulus m);

/// Fraction-free (Bareiss) determinant.
Int determinant(const SquareMatrix& a);

/// Exact inverse of a matrix with determinant +-1.  Throws consistency_error
/// if the inverse is not integral.
SquareMatrix unimodular_inverse(const SquareMatrix& a);

// --- symplectic forms ------------------------------------------------------

/// The chain intersection form: E[i][i+1] = 1, E[i+1][i] = -1 (0-based), all
/// other entries zero.  Skew-symmetric with determinant 1.
SquareMatrix chain_form(int genus);

/// The standard block form [[0, I], [-I, 0]].
SquareMatrix standard_form(int genus);

/// Unimodular P with P^T * chain_form * P = standard_form, found by
/// symplectic Gram-Schmidt over the integers.
SquareMatrix chain_to_standard_base_change(int genus);

bool is_symplectic(const SquareMatrix& m, const SquareMatrix& form);
bool is_symplectic(const SquareMatrix& m, const SquareMatrix& form, Modulus mod);
bool is_symplectic(const ModMatrix& m, const ModMatrix& form);

/// Inverse of an E-symplectic matrix via M^-1 = E^-1 M^T E.  Throws if the
/// input is not symplectic for the given form.
SquareMatrix symplectic_inverse(const SquareMatrix& m, const SquareMatrix& form);
SquareMatrix symplectic_inverse(const SquareMatrix& m, const SquareMatrix& form,
                                Modulus mod);
/// Residue version; form_inverse must be the reduction of E^-1.
ModMatrix symplectic_inverse(const ModMatrix& m, const ModMatrix& form,
                             const ModMatrix& form_inverse);

// --- residue arithmetic ----------------------------------------------------

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b);

/// Largest k <= n with m congruent to the identity mod 2^k (0 when the matrix
/// is not congruent to I mod 2).
int congruence_level(const ModMatrix& m);
int congruence_level(const SquareMatrix& m, Modulus mod);

// --- canonical byte encoding ------------------------------------------------
//
// Row-major, n bits per entry, little-endian bit packing: entry (r, c) of an
// s x s matrix occupies bits [(r*s + c)*n, (r*s + c + 1)*n) where bit p lives
// in byte p/8 at position p%8.  Injective on reduced matrices.

std::string encode(const ModMatrix& m);
ModMatrix decode(const std::string& bytes, int size, Modulus m);
std::string to_hex(const std::string& bytes);

// --- closed-form group orders ------------------------------------------------

/// |Sp(2g, Z/2^n)| = 2^(g^2) * prod_{i=1..g} (2^(2i) - 1) * 2^((n-1)g(2g+1)).
Int sp_group_order(int genus, int level);

/// |Gamma(2)/Gamma(2^n)| = 2^((n-1)g(2g+1)); level n = 1 gives 1.
Int gamma_quotient_order(int genus, int level);

}  // namespace hyperjac
