#pragma once

#include <utility>

#include "commfact/matrix.hpp"

namespace commfact {

// Writes a zero-diagonal matrix c as a single commutator [a, b] where
// a = diag(a_0, ..., a_{n-1}) has pairwise distinct central diagonal entries
// and b_jk = (a_j - a_k)^{-1} c_jk off the diagonal.  Needs n distinct
// central scalars in the ring, so GF(p) requires p >= n.
std::pair<matrix, matrix> zero_diag_commutator(const matrix& c);

// Writes a trace-zero triangular matrix t as a single commutator [x, y]
// where x is the shift matrix along the first sub/superdiagonal.  Works over
// any ring: the construction divides by nothing.
std::pair<matrix, matrix> tracezero_triangular_commutator(const matrix& t,
                                                          triangle orientation);

}  // namespace commfact
