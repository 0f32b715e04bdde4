#include "commfact/triangular.hpp"

#include "commfact/errors.hpp"
#include "commfact/kernels.hpp"

namespace commfact {

namespace {

// Upper-triangular case.  With rows/columns numbered from 0:
//   b[j][0]   = a[j][n-1]            for j >= 1
//   b[0][1]   = 1
//   b[j][k]   = a[j][k-1]            for k >= 2
//   c[1][0]   = a[0][0]
//   c[1][n-1] = a[0][n-1]
//   c[0][n-1] = 1
//   c[m][m-1] = 1                    for m = 2..n-1
// Both factors have zero diagonals and b·c = a.
std::pair<matrix, matrix> upper_factor(const matrix& a) {
  const std::size_t n = a.size();
  const ring_desc& ring = a.ring();
  const ring_value one = ring_value::one(ring);

  matrix b(ring, n);
  for (std::size_t j = 1; j < n; ++j) b.set(j, 0, a.at(j, n - 1));
  b.set(0, 1, one);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 2; k < n; ++k)
      if (j != k) b.set(j, k, a.at(j, k - 1));

  matrix c(ring, n);
  c.set(1, 0, a.at(0, 0));
  c.set(1, n - 1, a.at(0, n - 1));
  c.set(0, n - 1, one);
  for (std::size_t m = 2; m < n; ++m) c.set(m, m - 1, one);

  return {b, c};
}

void check_triangular(const matrix& a, triangle orientation) {
  const bool tri = orientation == triangle::upper ? a.is_upper_triangular()
                                                  : a.is_lower_triangular();
  if (!tri)
    fail(errc::not_triangular,
         orientation == triangle::upper ? "input must be upper triangular"
                                        : "input must be lower triangular");
}

}  // namespace

std::pair<matrix, matrix> triangular_zero_diag_factor(const matrix& a,
                                                      triangle orientation) {
  if (a.size() < 3)
    fail(errc::size, "zero-diagonal factorization needs size at least 3");
  check_triangular(a, orientation);

  if (orientation == triangle::upper) return upper_factor(a);
  auto [b, c] = upper_factor(a.flipped());
  // flip reverses nothing about the order: flip(b)·flip(c) = flip(b·c).
  return {b.flipped(), c.flipped()};
}

commutator_certificate triangular_two_commutators(const matrix& a,
                                                  triangle orientation) {
  auto [b, c] = triangular_zero_diag_factor(a, orientation);
  auto [x1, y1] = zero_diag_commutator(b);
  auto [x2, y2] = zero_diag_commutator(c);

  commutator_certificate cert{a, std::nullopt, {}, "Thm 3.3"};
  cert.pairs.push_back({x1, y1, false, false});
  cert.pairs.push_back({x2, y2, false, false});
  return cert;
}

}  // namespace commfact
