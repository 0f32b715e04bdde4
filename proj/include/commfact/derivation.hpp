#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "commfact/matrix.hpp"

namespace commfact {

// Exact check of the degree-three composition identity for the inner
// derivation D = [a, ·]:
//   x·D³(y)·z = D(x·D²(y)·z) − D(x)·D(D(y)·z) − D(x·D(y))·D(z) + 2·D(x)·D(y)·D(z)
bool herstein_identity_check(const matrix& a, const matrix& x, const matrix& y,
                             const matrix& z);

// Exact check of the two-factor variant, valid when [a, b]·c = 0:
//   x·D(b)·D(c)·z = D(x·b)·D(c·z) − D(x)·D(b·c·z)
// E_PRECONDITION when [a, b]·c != 0.
bool lder_identity_check(const matrix& a, const matrix& b, const matrix& c,
                         const matrix& x, const matrix& z);

// A column v with v, av, a²v linearly independent; nullopt exactly when the
// minimal polynomial of a has degree <= 2.  Deterministic: 0/1 vectors in
// binary-counter order, then seeded random vectors.
std::optional<std::vector<ring_value>> krylov_witness(const matrix& a);

struct rank_one_witness {
  std::vector<ring_value> v;  // column with independent v, av, a²v
  std::vector<ring_value> f;  // row with f·v = f·av = 0, f·a²v = 1
  matrix b;                   // v·f; satisfies b² = bab = 0, b·a²·b = b
};

// E_DEGREE_TOO_LOW when the minimal polynomial has degree <= 2.
rank_one_witness lder2_witness(const matrix& a);

// x = Σ_j [a, p_j]·[a, q_j] with exactly n summands; empty for x = 0.
// Exists for every x whenever deg minpoly(a) >= 3; re-verified on every
// call before returning.
std::vector<std::pair<matrix, matrix>> tder_decompose(const matrix& a,
                                                      const matrix& x);

struct span_report {
  std::size_t dimension;
  bool full;  // dimension == n²
  int minpoly_degree;
  std::vector<matrix> basis;  // the products that grew the span, lex order
};

// Dimension of span{ [a, E_ij]·[a, E_kl] } in M_n(F).  Full exactly when
// the minimal polynomial of a has degree > 2 (checked internally).
span_report product_span_dim(const matrix& a);

}  // namespace commfact
