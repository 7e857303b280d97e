#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hyperjac/ratfunc.hpp"
#include "hyperjac/report.hpp"

namespace hyperjac {

inline bool field_is_zero(const Rat& x) { return x == 0; }
inline bool field_is_zero(const RationalFunction& x) { return x.is_zero(); }
inline Rat field_inverse(const Rat& x) {
  if (x == 0) throw error("inverse of zero");
  return 1 / x;
}
inline RationalFunction field_inverse(const RationalFunction& x) {
  return x.inverse();
}

/// Ordered list of square roots adjoined to the base field K: radical k
/// satisfies r_k^2 = squares[k].  Index 0 is iota (square -1); the rest are
/// s_ij with square alpha_i - alpha_j, i < j, in lexicographic order.
template <class K>
struct RadicalBasis {
  std::vector<std::string> names;
  std::vector<K> squares;
  K zero;
  K one;

  int count() const { return static_cast<int>(names.size()); }

  friend bool operator==(const RadicalBasis& a, const RadicalBasis& b) {
    return a.names == b.names && a.squares == b.squares;
  }
};

/// Element of the multiquadratic tower K(r_0, ..., r_{m-1}) in the canonical
/// basis of radical monomials: value = sum over subsets S of coeff_S *
/// prod_{k in S} r_k.  Coefficient maps store no zeros, so equal elements
/// have equal maps.
template <class K>
class TowerElt {
 public:
  using BasisPtr = std::shared_ptr<const RadicalBasis<K>>;
  using Mask = std::uint32_t;

  explicit TowerElt(BasisPtr basis) : basis_(std::move(basis)) {
    if (!basis_) throw error("tower element needs a radical basis");
    if (basis_->count() > 20) throw error("too many radicals for subset masks");
  }

  static TowerElt from_base(BasisPtr basis, K value) {
    TowerElt e(std::move(basis));
    if (!field_is_zero(value)) e.coeffs_.emplace(0u, std::move(value));
    return e;
  }

  static TowerElt radical(BasisPtr basis, int index) {
    TowerElt e(basis);
    if (index < 0 || index >= basis->count())
      throw error("radical index out of range");
    e.coeffs_.emplace(Mask(1) << index, basis->one);
    return e;
  }

  const BasisPtr& basis() const { return basis_; }
  const std::map<Mask, K>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of the radical monomial for subset mask (zero if absent).
  K coefficient(Mask mask) const {
    auto it = coeffs_.find(mask);
    return it == coeffs_.end() ? basis_->zero : it->second;
  }

  bool depends_on_radical(int index) const {
    for (const auto& [mask, c] : coeffs_)
      if (mask & (Mask(1) << index)) return true;
    return false;
  }

  friend TowerElt operator+(const TowerElt& a, const TowerElt& b) {
    a.require_same_basis(b);
    TowerElt out = a;
    for (const auto& [mask, c] : b.coeffs_) out.add_term(mask, c);
    return out;
  }

  friend TowerElt operator-(const TowerElt& a) {
    TowerElt out = a;
    for (auto& [mask, c] : out.coeffs_) c = -c;
    return out;
  }

  friend TowerElt operator-(const TowerElt& a, const TowerElt& b) {
    return a + (-b);
  }

  friend TowerElt operator*(const TowerElt& a, const TowerElt& b) {
    a.require_same_basis(b);
    TowerElt out(a.basis_);
    for (const auto& [ma, ca] : a.coeffs_)
      for (const auto& [mb, cb] : b.coeffs_) {
        K c = ca * cb;
        Mask shared = ma & mb;
        for (int k = 0; shared != 0; ++k, shared >>= 1)
          if (shared & 1) c = c * a.basis_->squares[k];
        out.add_term(ma ^ mb, c);
      }
    return out;
  }

  TowerElt scaled(const K& c) const {
    TowerElt out(basis_);
    if (field_is_zero(c)) return out;
    for (const auto& [mask, coef] : coeffs_) out.add_term(mask, coef * c);
    return out;
  }

  /// Inverse by conjugation down the tower: split at the top radical
  /// present, multiply by the conjugate, recurse on the norm.
  TowerElt inverse() const {
    if (is_zero()) throw error("inverse of zero tower element");
    return inverse_impl();
  }

  TowerElt pow(unsigned e) const {
    TowerElt acc = from_base(basis_, basis_->one);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  friend bool operator==(const TowerElt& a, const TowerElt& b) {
    return *a.basis_ == *b.basis_ && a.coeffs_ == b.coeffs_;
  }

  /// True when every nonzero coefficient lies in the subset lattice of the
  /// radicals listed in `indices`.
  bool supported_by(std::span<const int> indices) const {
    Mask allowed = 0;
    for (int i : indices) allowed |= Mask(1) << i;
    for (const auto& [mask, c] : coeffs_)
      if (mask & ~allowed) return false;
    return true;
  }

  /// The same element re-expressed over the sub-basis of the given radicals,
  /// or nullopt when a coefficient lives outside their subset lattice.
  std::optional<TowerElt> restricted_to(std::span<const int> indices) const {
    if (!supported_by(indices)) return std::nullopt;
    std::vector<int> order(indices.begin(), indices.end());
    std::vector<std::string> names;
    std::vector<K> squares;
    for (int i : order) {
      names.push_back(basis_->names[i]);
      squares.push_back(basis_->squares[i]);
    }
    auto sub = std::make_shared<RadicalBasis<K>>(RadicalBasis<K>{
        std::move(names), std::move(squares), basis_->zero, basis_->one});
    TowerElt out(sub);
    for (const auto& [mask, c] : coeffs_) {
      Mask remapped = 0;
      for (std::size_t k = 0; k < order.size(); ++k)
        if (mask & (Mask(1) << order[k])) remapped |= Mask(1) << k;
      out.coeffs_.emplace(remapped, c);
    }
    return out;
  }

 private:
  void require_same_basis(const TowerElt& other) const {
    if (!(*basis_ == *other.basis_))
      throw error("radical set mismatch between tower elements");
  }

  void add_term(Mask mask, const K& c) {
    if (field_is_zero(c)) return;
    auto [it, inserted] = coeffs_.emplace(mask, c);
    if (!inserted) {
      it->second = it->second + c;
      if (field_is_zero(it->second)) coeffs_.erase(it);
    }
  }

  int top_radical() const {
    int top = -1;
    for (const auto& [mask, c] : coeffs_)
      for (int k = 0; k < basis_->count(); ++k)
        if (mask & (Mask(1) << k)) top = std::max(top, k);
    return top;
  }

  TowerElt inverse_impl() const {
    const int k = top_radical();
    if (k < 0) {
      // Base-field element.
      return from_base(basis_, field_inverse(coefficient(0)));
    }
    const Mask bit = Mask(1) << k;
    TowerElt head(basis_), tail(basis_);  // value = head + tail * r_k
    for (const auto& [mask, c] : coeffs_) {
      if (mask & bit)
        tail.coeffs_.emplace(mask & ~bit, c);
      else
        head.coeffs_.emplace(mask, c);
    }
    const TowerElt square = from_base(basis_, basis_->squares[k]);
    const TowerElt norm = head * head - tail * tail * square;
    if (norm.is_zero())
      throw consistency_error(
          "vanishing norm: radicals are not independent over the base field");
    const TowerElt conj_times = norm.inverse_impl();
    // (head - tail r_k) / norm
    TowerElt out = head * conj_times;
    const TowerElt minus_tail = -(tail * conj_times);
    for (const auto& [mask, c] : minus_tail.coeffs_) out.add_term(mask | bit, c);
    return out;
  }

  BasisPtr basis_;
  std::map<Mask, K> coeffs_;
};

using SymbolicTower = TowerElt<RationalFunction>;
using NumericTower = TowerElt<Rat>;
using SymbolicBasisPtr = SymbolicTower::BasisPtr;
using NumericBasisPtr = NumericTower::BasisPtr;

/// Index of radical s_ij (1-based root indices, i < j) in the genus-g basis;
/// index 0 is iota.
int radical_index(int genus, int i, int j);

/// Radicals [iota] + [s_ij] over Q(alpha_1..alpha_{2g+1}).
SymbolicBasisPtr symbolic_radical_basis(int genus);

/// The same radical shape over Q at a specialization point (values of the
/// alpha_i).  The point must have pairwise distinct coordinates.
NumericBasisPtr numeric_radical_basis(int genus, std::span<const Rat> point);

/// Specialize a symbolic tower element at a rational point (ring map that
/// keeps the radical monomial structure).
NumericTower specialize(const SymbolicTower& x, const NumericBasisPtr& basis,
                        std::span<const Rat> point);

/// True when every nonempty subset of {-1} + {a_i - a_j} has a non-square
/// product, so the genus-1 numeric tower is a degree-16 field.
bool numeric_point_independent(std::span<const Rat> point);

/// Random independent triples with distinct small-integer coordinates.
std::vector<std::array<Rat, 3>> independent_triples(int count,
                                                    std::uint64_t seed);

/// For every nonempty subset of the 2g^2+g differences alpha_i - alpha_j,
/// certifies that the product is not a square in Q(alpha): the degree
/// argument for [L_2 : L_1] = 2^(2g^2+g).  Supported for g <= 2.
VerificationReport verify_radical_independence(int genus, bool fault = false);

}  // namespace hyperjac
