#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hyperjac/errors.hpp"

namespace hyperjac {

/// A word in the braid group B_s.  Letters are signed generator indices:
/// +k stands for sigma_k, -k for its inverse, 1 <= k <= s-1.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  BraidWord(int strands_, std::vector<int> letters_);
  static BraidWord empty(int strands) { return BraidWord(strands, {}); }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

/// Bijection on {0, ..., n-1}; printed 1-based to match the strand labels.
class Permutation {
 public:
  explicit Permutation(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[i]; }
  bool is_identity() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse_word(const BraidWord& w);

/// Cancels adjacent k, -k pairs to a fixed point.
BraidWord free_reduce(const BraidWord& w);

/// Image of w under B_s -> S_s, sigma_i -> (i, i+1).
Permutation permutation_of(const BraidWord& w);

bool is_pure(const BraidWord& w);

/// Standard pure-braid generator A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1
/// ... s_{j-1}^-1, 1 <= i < j <= strands.
BraidWord pure_braid_generator(int strands, int i, int j);

/// All A_ij in lexicographic (i, j) order; there are s(s-1)/2 of them.
std::vector<BraidWord> all_pure_braid_generators(int strands);

/// Uniform random letters, length uniform in [1, max_length].
BraidWord random_word(int strands, int max_length, std::mt19937_64& rng);

/// Comma-separated signed indices, e.g. "1,2,-1".
BraidWord parse_word(int strands, std::string_view text);
std::string format_word(const BraidWord& w);

}  // namespace hyperjac
