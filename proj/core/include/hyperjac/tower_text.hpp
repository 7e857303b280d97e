#pragma once

#include <string>
#include <string_view>

#include "hyperjac/tower.hpp"

namespace hyperjac {

/// Renders a tower element as coefficient * radical-monomial terms, e.g.
/// "(a1 - a2)*s12*s13 + (1)*i".  parse_tower round-trips the output.
std::string to_text(const SymbolicTower& x);

/// Evaluates an arithmetic expression over the tower: identifiers a1, a2,
/// ... are the base-field variables, radical names (i, s12, ...) are the
/// adjoined square roots; +, -, *, /, ^ and parentheses as usual.
SymbolicTower parse_tower(const SymbolicBasisPtr& basis, std::string_view text);

}  // namespace hyperjac
