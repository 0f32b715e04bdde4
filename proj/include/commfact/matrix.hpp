#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "commfact/ring.hpp"

namespace commfact {

enum class triangle { upper, lower };

// Dense square matrix over one configured ring; entries validated against the
// ring at construction and mutation. Indices are 0-based.
class matrix {
 public:
  matrix(ring_desc ring, std::size_t n)
      : n_(n), ring_(ring), e_(n * n, ring_value::zero(ring)) {
    if (n == 0) fail(errc::size, "matrix size must be at least 1");
  }

  static matrix identity(const ring_desc& ring, std::size_t n);
  static matrix from_entries(const ring_desc& ring, std::size_t n,
                             std::vector<ring_value> entries);
  // Single nonzero entry v at (i, j).
  static matrix unit(const ring_desc& ring, std::size_t n, std::size_t i,
                     std::size_t j, const ring_value& v);

  std::size_t size() const { return n_; }
  const ring_desc& ring() const { return ring_; }

  const ring_value& at(std::size_t i, std::size_t j) const {
    return e_[i * n_ + j];
  }
  void set(std::size_t i, std::size_t j, ring_value v);

  matrix operator+(const matrix& o) const;
  matrix operator-(const matrix& o) const;
  matrix operator*(const matrix& o) const;
  matrix operator-() const;
  matrix scaled_left(const ring_value& s) const;
  matrix scaled_right(const ring_value& s) const;
  bool operator==(const matrix& o) const;
  bool operator!=(const matrix& o) const { return !(*this == o); }

  ring_value trace() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  bool has_zero_diagonal() const;
  // The scalar λ when the matrix equals λ·1 with λ central in the ring.
  std::optional<ring_value> central_scalar() const;

  // Entry reversal (i,j) -> (n-1-i, n-1-j): conjugation by the antidiagonal
  // permutation, so products and commutators are preserved.
  matrix flipped() const;

 private:
  std::size_t n_;
  ring_desc ring_;
  std::vector<ring_value> e_;

  void check_compatible(const matrix& o) const;
};

matrix commutator(const matrix& a, const matrix& b);

// Row vector times matrix and matrix times column vector, for block assembly.
std::vector<ring_value> row_times_matrix(const std::vector<ring_value>& row,
                                         const matrix& m);
std::vector<ring_value> matrix_times_col(const matrix& m,
                                         const std::vector<ring_value>& col);

}  // namespace commfact
