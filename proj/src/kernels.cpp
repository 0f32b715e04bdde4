#include "commfact/kernels.hpp"

#include "commfact/errors.hpp"

namespace commfact {

std::pair<matrix, matrix> zero_diag_commutator(const matrix& c) {
  const std::size_t n = c.size();
  if (!c.has_zero_diagonal())
    fail(errc::not_zero_diag, "input must have a zero diagonal");

  // Distinct central scalars; throws E_FIELD_TOO_SMALL / E_UNSUPPORTED_RING.
  std::vector<ring_value> d = distinct_central(c.ring(), n);

  matrix a = matrix(c.ring(), n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, i, d[i]);

  matrix b = matrix(c.ring(), n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      const ring_value& cjk = c.at(j, k);
      if (cjk.is_zero()) continue;
      // d values are central, so the difference's inverse commutes with
      // everything and the side of the multiplication does not matter.
      b.set(j, k, (d[j] - d[k]).inv() * cjk);
    }
  }
  return {a, b};
}

namespace {

// Upper-triangular case.  x is the superdiagonal shift; y is filled row by
// row with y_{i+1,j} = t_{i,j} + y_{i,j-1} (first row zero).  Then
// (xy)_{ij} = y_{i+1,j} and (yx)_{ij} = y_{i,j-1}, so [x, y] = t; the final
// row of the recurrence holds exactly because the trace vanishes.
std::pair<matrix, matrix> upper_case(const matrix& t) {
  const std::size_t n = t.size();
  const ring_desc& ring = t.ring();

  matrix x = matrix(ring, n);
  for (std::size_t i = 0; i + 1 < n; ++i) x.set(i, i + 1, ring_value::one(ring));

  matrix y = matrix(ring, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ring_value v = t.at(i, j);
      if (j > 0) v = v + y.at(i, j - 1);
      y.set(i + 1, j, v);
    }
  }
  return {x, y};
}

}  // namespace

std::pair<matrix, matrix> tracezero_triangular_commutator(const matrix& t,
                                                          triangle orientation) {
  const bool tri = orientation == triangle::upper ? t.is_upper_triangular()
                                                  : t.is_lower_triangular();
  if (!tri)
    fail(errc::not_triangular,
         orientation == triangle::upper ? "input must be upper triangular"
                                        : "input must be lower triangular");
  if (!t.trace().is_zero())
    fail(errc::trace_nonzero, "input must have trace zero");

  if (orientation == triangle::upper) return upper_case(t);

  // Lower orientation: conjugate by the antidiagonal permutation, which
  // swaps the two orientations and preserves commutators.
  auto [x, y] = upper_case(t.flipped());
  return {x.flipped(), y.flipped()};
}

}  // namespace commfact
