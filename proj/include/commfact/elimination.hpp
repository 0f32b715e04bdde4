#pragma once

#include <cstddef>
#include <vector>

#include "commfact/matrix.hpp"

namespace commfact {

// Gauss-Jordan over a division ring. Row operations always multiply from the
// left, so the results are valid without commutativity.
struct echelon_result {
  matrix reduced;    // reduced row echelon form, pivots normalized to 1
  matrix transform;  // transform * input == reduced
  std::size_t rank;
};

echelon_result row_reduce(const matrix& a);

std::size_t rank(const matrix& a);

// Two-sided inverse; E_SINGULAR (reporting the rank) when none exists.
matrix invert(const matrix& a);

bool is_invertible(const matrix& a);

// A nonzero row u with u·a = 0; E_NOT_SINGULAR when a is invertible.
std::vector<ring_value> left_kernel_row(const matrix& a);

// Incremental span of vectors in R^dim viewed as a right module (coefficients
// multiply from the right), over a division ring. Over a field this is the
// ordinary linear span. Insertions are fully reduced, so results do not
// depend on insertion grouping.
class span_builder {
 public:
  span_builder(ring_desc ring, std::size_t dim);

  // Returns true when v enlarged the span. When it did not, last_combo()
  // holds coefficients c (one per previously inserted vector, insertion
  // order) with v = Σ inserted_j · c_j.
  bool insert(const std::vector<ring_value>& v);

  std::size_t rank() const { return basis_.size(); }
  std::size_t inserted() const { return inserted_; }
  const std::vector<ring_value>& last_combo() const { return combo_; }

 private:
  ring_desc ring_;
  std::size_t dim_;
  std::size_t inserted_ = 0;
  struct row {
    std::vector<ring_value> v;
    std::vector<ring_value> expr;  // v == Σ inserted_j · expr[j]
    std::size_t pivot;
  };
  std::vector<row> basis_;
  std::vector<ring_value> combo_;
};

}  // namespace commfact
