#pragma once

// JSON forms of lattices and polynomials:
//   lattice:    {"d": int, "M": int, "z": [int, ...]}
//   polynomial: {"support": [[int, ...], ...], "coeffs": [[re, im], ...]}
// Parse errors throw std::runtime_error.

#include <string>
#include <string_view>

#include "rank1/lattice.hpp"

namespace rank1 {

std::string to_json(const Rank1Lattice& lattice);
Rank1Lattice lattice_from_json(std::string_view text);

std::string to_json(const TrigPolynomial& poly);
TrigPolynomial polynomial_from_json(std::string_view text);

}  // namespace rank1
