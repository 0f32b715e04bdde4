#pragma once

#include "commfact/certificate.hpp"
#include "commfact/matrix.hpp"

namespace commfact {

// a = x · y · z with x lower triangular (invertible), y unit upper
// triangular, z unit lower triangular.  Division rings only; E_SINGULAR
// when a is not invertible.
struct triangular_decomposition {
  matrix x;
  matrix y;
  matrix z;
};

triangular_decomposition vw_decompose(const matrix& a);

// a · q = x with x lower triangular and q invertible (a product of column
// swaps and elementary column operations).  Column operations never touch a
// row below the one being cleared, so a zero last row of a stays zero in x.
struct column_reduction {
  matrix x;
  matrix q;
  matrix q_inv;
};

column_reduction khermite_column_reduce(const matrix& a);

// w · a · w^{-1} = b · c with b lower triangular and c unit upper
// triangular; b is invertible exactly when a is.  Division rings only.
struct bc_result {
  similarity_witness w;
  matrix b;
  matrix c;
};

bc_result bc_similarity(const matrix& a);

// Certificate that an invertible a (n >= 3, enough central scalars) is a
// product of exactly three commutators.
commutator_certificate invertible_three_commutators(const matrix& a);

// Certificate that a singular a is a product of exactly two commutators
// (n = 2 delegates to the 2x2 route; n >= 3 needs at least 3 elements in
// the ring's base field).
commutator_certificate singular_two_commutators(const matrix& a);

}  // namespace commfact
