#include "commfact/elimination.hpp"

namespace commfact {

namespace {

void require_division_ring(const ring_desc& r, const char* what) {
  if (!r.is_division_ring()) {
    fail(errc::unsupported_ring,
         std::string(what) + " requires a division ring, got " + r.str());
  }
}

}  // namespace

echelon_result row_reduce(const matrix& a) {
  require_division_ring(a.ring(), "row reduction");
  const std::size_t n = a.size();
  matrix w = a;
  matrix t = matrix::identity(a.ring(), n);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t piv = n;
    for (std::size_t i = r; i < n; ++i) {
      if (!w.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == n) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < n; ++j) {
        ring_value tmp = w.at(piv, j);
        w.set(piv, j, w.at(r, j));
        w.set(r, j, tmp);
        tmp = t.at(piv, j);
        t.set(piv, j, t.at(r, j));
        t.set(r, j, tmp);
      }
    }
    ring_value pinv = w.at(r, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      w.set(r, j, pinv * w.at(r, j));
      t.set(r, j, pinv * t.at(r, j));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || w.at(i, col).is_zero()) continue;
      ring_value m = w.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        w.set(i, j, w.at(i, j) - m * w.at(r, j));
        t.set(i, j, t.at(i, j) - m * t.at(r, j));
      }
    }
    ++r;
  }
  return {std::move(w), std::move(t), r};
}

std::size_t rank(const matrix& a) { return row_reduce(a).rank; }

matrix invert(const matrix& a) {
  echelon_result e = row_reduce(a);
  if (e.rank < a.size()) {
    fail(errc::singular, "matrix is singular (rank " + std::to_string(e.rank) +
                             " of " + std::to_string(a.size()) + ")");
  }
  return std::move(e.transform);
}

bool is_invertible(const matrix& a) {
  if (a.ring().is_division_ring()) return row_reduce(a).rank == a.size();
  // Counterexample ring: pure parts square to zero entrywise, so the matrix
  // of pure parts is nilpotent as a correction term and invertibility is
  // decided by the unit parts alone, over the base field.
  const ring_desc base = a.ring().base().p == 0
                             ? ring_desc::rational()
                             : ring_desc::prime_field(a.ring().base().p);
  matrix u(base, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      u.set(i, j, ring_value::from_field(a.at(i, j).cx(0)));
  return row_reduce(u).rank == u.size();
}

std::vector<ring_value> left_kernel_row(const matrix& a) {
  echelon_result e = row_reduce(a);
  if (e.rank == a.size()) {
    fail(errc::not_singular, "matrix is invertible, left kernel is trivial");
  }
  // Rows of the transform below the rank map a to zero rows.
  std::vector<ring_value> u;
  u.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) u.push_back(e.transform.at(e.rank, j));
  return u;
}

span_builder::span_builder(ring_desc ring, std::size_t dim)
    : ring_(ring), dim_(dim) {
  require_division_ring(ring, "span tracking");
}

bool span_builder::insert(const std::vector<ring_value>& v) {
  if (v.size() != dim_) fail(errc::shape, "vector length differs from span dimension");
  std::vector<ring_value> res = v;
  std::vector<ring_value> expr(inserted_ + 1, ring_value::zero(ring_));
  expr[inserted_] = ring_value::one(ring_);
  for (const row& b : basis_) {
    const ring_value c = res[b.pivot];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b.v[j].is_zero()) res[j] = res[j] - b.v[j] * c;
    }
    for (std::size_t j = 0; j < b.expr.size(); ++j) {
      if (!b.expr[j].is_zero()) expr[j] = expr[j] - b.expr[j] * c;
    }
  }
  std::size_t pivot = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!res[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  ++inserted_;
  if (pivot == dim_) {
    // v = Σ inserted_j · (-expr_j) over the earlier vectors.
    combo_.assign(inserted_ - 1, ring_value::zero(ring_));
    for (std::size_t j = 0; j + 1 < inserted_; ++j) {
      if (j < expr.size()) combo_[j] = -expr[j];
    }
    return false;
  }
  ring_value pinv = res[pivot].inv();
  for (std::size_t j = 0; j < dim_; ++j) res[j] = res[j] * pinv;
  for (auto& c : expr) c = c * pinv;
  // Clear the new pivot coordinate from the existing basis.
  for (row& b : basis_) {
    const ring_value c = b.v[pivot];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!res[j].is_zero()) b.v[j] = b.v[j] - res[j] * c;
    }
    b.expr.resize(std::max(b.expr.size(), expr.size()), ring_value::zero(ring_));
    for (std::size_t j = 0; j < expr.size(); ++j) {
      if (!expr[j].is_zero()) b.expr[j] = b.expr[j] - expr[j] * c;
    }
  }
  basis_.push_back(row{std::move(res), std::move(expr), pivot});
  return true;
}

}  // namespace commfact
