#pragma once

#include <utility>

#include "commfact/certificate.hpp"
#include "commfact/matrix.hpp"

namespace commfact {

// Factors a triangular matrix a (n >= 3) as a product b·c of two matrices
// with zero diagonals.  Entirely multiplicative: works over any unital ring.
std::pair<matrix, matrix> triangular_zero_diag_factor(const matrix& a,
                                                      triangle orientation);

// Certificate that a triangular matrix (n >= 3) is a product of two
// commutators: factor into zero-diagonal b·c, then write each factor as a
// single commutator against a distinct-central diagonal.
commutator_certificate triangular_two_commutators(const matrix& a,
                                                  triangle orientation);

}  // namespace commfact
