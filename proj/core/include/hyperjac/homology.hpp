#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperjac/braid.hpp"
#include "hyperjac/modmatrix.hpp"
#include "hyperjac/report.hpp"

namespace hyperjac {

/// Integer homology class in the chain basis c_1, ..., c_2g.
using CycleVector = std::vector<Int>;

/// The i-th vanishing cycle c_i (1-based) as a coordinate vector.
CycleVector chain_cycle(int genus, int i);

/// x^T E y; skew-symmetric in its arguments.
Int pairing(const CycleVector& x, const CycleVector& y, const SquareMatrix& form);

/// Transvection along v: x -> x + <x, v> v, as the matrix I - v v^T E.
/// E-symplectic for every nonzero v; fixes the complement of v.
SquareMatrix transvection_matrix(const CycleVector& v, const SquareMatrix& form);

/// R(sigma_i) = transvection along c_i; inverse letters map to the inverse
/// transvection.  Extended multiplicatively, left to right.
SquareMatrix rep_letter(int letter, int genus);
SquareMatrix rep_word(const BraidWord& w, int genus);
/// Same product carried out mod 2^n; safe for words too long to hold exactly.
ModMatrix rep_word(const BraidWord& w, int genus, Modulus m);

/// Checks every defining relation of B_{2g+1} as exact matrix equality:
/// adjacent braid relations and all commuting pairs.
/// `fault` flips one entry of R(sigma_1) on one side to exercise reporting.
VerificationReport verify_braid_relations(int genus, bool fault = false);

/// Samples random words and checks: w is pure <=> R(w) = I mod 2.
VerificationReport purity_mod2_property(int genus, int samples,
                                        std::uint64_t seed, bool fault = false);

/// Samples random words and checks that R(w) preserves the chain form
/// exactly (over Z, not just mod 2^n).
VerificationReport symplectic_sample_property(int genus, int samples,
                                              std::uint64_t seed);

}  // namespace hyperjac
