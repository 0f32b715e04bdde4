#include "commfact/matrix.hpp"

namespace commfact {

matrix matrix::identity(const ring_desc& ring, std::size_t n) {
  matrix m(ring, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = ring_value::one(ring);
  return m;
}

matrix matrix::from_entries(const ring_desc& ring, std::size_t n,
                            std::vector<ring_value> entries) {
  if (entries.size() != n * n) {
    fail(errc::shape, "expected " + std::to_string(n * n) + " entries, got " +
                          std::to_string(entries.size()));
  }
  matrix m(ring, n);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (!(entries[k].ring() == ring)) {
      fail(errc::ring_mismatch, "entry " + std::to_string(k) + " lies in " +
                                    entries[k].ring().str() + ", matrix ring is " +
                                    ring.str());
    }
    m.e_[k] = std::move(entries[k]);
  }
  return m;
}

matrix matrix::unit(const ring_desc& ring, std::size_t n, std::size_t i,
                    std::size_t j, const ring_value& v) {
  matrix m(ring, n);
  m.set(i, j, v);
  return m;
}

void matrix::set(std::size_t i, std::size_t j, ring_value v) {
  if (!(v.ring() == ring_)) {
    fail(errc::ring_mismatch,
         "entry lies in " + v.ring().str() + ", matrix ring is " + ring_.str());
  }
  e_[i * n_ + j] = std::move(v);
}

void matrix::check_compatible(const matrix& o) const {
  if (n_ != o.n_) fail(errc::shape, "matrix sizes differ");
  if (!(ring_ == o.ring_)) fail(errc::ring_mismatch, "matrix rings differ");
}

matrix matrix::operator+(const matrix& o) const {
  check_compatible(o);
  matrix r(ring_, n_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

matrix matrix::operator-(const matrix& o) const {
  check_compatible(o);
  matrix r(ring_, n_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

matrix matrix::operator*(const matrix& o) const {
  check_compatible(o);
  matrix r(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const ring_value& a = e_[i * n_ + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const ring_value& b = o.e_[k * n_ + j];
        if (b.is_zero()) continue;
        r.e_[i * n_ + j] = r.e_[i * n_ + j] + a * b;
      }
    }
  }
  return r;
}

matrix matrix::operator-() const {
  matrix r(ring_, n_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
  return r;
}

matrix matrix::scaled_left(const ring_value& s) const {
  matrix r(ring_, n_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = s * e_[k];
  return r;
}

matrix matrix::scaled_right(const ring_value& s) const {
  matrix r(ring_, n_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
  return r;
}

bool matrix::operator==(const matrix& o) const {
  if (n_ != o.n_ || !(ring_ == o.ring_)) return false;
  return e_ == o.e_;
}

ring_value matrix::trace() const {
  ring_value t = ring_value::zero(ring_);
  for (std::size_t i = 0; i < n_; ++i) t = t + at(i, i);
  return t;
}

bool matrix::is_zero() const {
  for (const auto& v : e_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool matrix::is_identity() const { return *this == identity(ring_, n_); }

bool matrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!at(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool matrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!at(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool matrix::has_zero_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!at(i, i).is_zero()) return false;
  }
  return true;
}

std::optional<ring_value> matrix::central_scalar() const {
  const ring_value& d = at(0, 0);
  if (!d.is_central()) return std::nullopt;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j ? !(at(i, j) == d) : !at(i, j).is_zero()) return std::nullopt;
    }
  }
  return d;
}

matrix matrix::flipped() const {
  matrix r(ring_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      r.e_[(n_ - 1 - i) * n_ + (n_ - 1 - j)] = at(i, j);
    }
  }
  return r;
}

matrix commutator(const matrix& a, const matrix& b) { return a * b - b * a; }

std::vector<ring_value> row_times_matrix(const std::vector<ring_value>& row,
                                         const matrix& m) {
  if (row.size() != m.size()) fail(errc::shape, "row length differs from matrix size");
  std::vector<ring_value> out(m.size(), ring_value::zero(m.ring()));
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      out[j] = out[j] + row[k] * m.at(k, j);
    }
  }
  return out;
}

std::vector<ring_value> matrix_times_col(const matrix& m,
                                         const std::vector<ring_value>& col) {
  if (col.size() != m.size()) fail(errc::shape, "column length differs from matrix size");
  std::vector<ring_value> out(m.size(), ring_value::zero(m.ring()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      out[i] = out[i] + m.at(i, k) * col[k];
    }
  }
  return out;
}

}  // namespace commfact
