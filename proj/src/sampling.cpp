#include "commfact/sampling.hpp"

#include <stdexcept>

#include "commfact/elimination.hpp"
#include "commfact/errors.hpp"

namespace commfact {

field_scalar random_field_scalar(rng& g, field_desc d) {
  if (d.is_rational()) {
    const long num = g.int_range(-9, 9);
    const long den = g.int_range(1, 4);
    return field_scalar::rational(mpq_class(num, den));
  }
  return field_scalar::mod_p(d.p, g.below(d.p));
}

ring_value random_value(rng& g, const ring_desc& r) {
  switch (r.kind()) {
    case ring_kind::rational:
    case ring_kind::prime_field:
      return ring_value::from_field(random_field_scalar(g, r.base()));
    case ring_kind::quaternion:
      return ring_value::quaternion_value(
          random_field_scalar(g, r.base()).rat(),
          random_field_scalar(g, r.base()).rat(),
          random_field_scalar(g, r.base()).rat(),
          random_field_scalar(g, r.base()).rat());
    case ring_kind::counterexample: {
      std::array<field_scalar, 5> t{
          random_field_scalar(g, r.base()), random_field_scalar(g, r.base()),
          random_field_scalar(g, r.base()), random_field_scalar(g, r.base()),
          random_field_scalar(g, r.base())};
      return ring_value::counterexample_value(t);
    }
  }
  throw std::logic_error("unhandled ring kind");
}

ring_value random_invertible_value(rng& g, const ring_desc& r) {
  for (int tries = 0; tries < 256; ++tries) {
    ring_value v = random_value(g, r);
    if (v.is_invertible()) return v;
  }
  throw std::logic_error("invertible scalar rejection sampling stalled");
}

matrix random_matrix(rng& g, const ring_desc& r, std::size_t n) {
  matrix m(r, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_value(g, r));
  return m;
}

matrix random_invertible_matrix(rng& g, const ring_desc& r, std::size_t n) {
  for (int tries = 0; tries < 256; ++tries) {
    matrix m = random_matrix(g, r, n);
    if (is_invertible(m)) return m;
  }
  throw std::logic_error("invertible matrix rejection sampling stalled");
}

matrix random_singular_matrix(rng& g, const ring_desc& r, std::size_t n) {
  if (n < 2) fail(errc::size, "a singular sample needs size at least 2");
  matrix m = random_matrix(g, r, n);
  // Left-combine the first n-1 rows into the last: u·m = 0 for the row
  // vector u = (c_0, ..., c_{n-2}, -1).
  for (std::size_t j = 0; j < n; ++j)
    m.set(n - 1, j, ring_value::zero(r));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    ring_value c = random_value(g, r);
    if (i == 0 && g.below(4) == 0) c = ring_value::zero(r);
    for (std::size_t j = 0; j < n; ++j)
      m.set(n - 1, j, m.at(n - 1, j) + c * m.at(i, j));
  }
  return m;
}

matrix random_triangular_matrix(rng& g, const ring_desc& r, std::size_t n,
                                triangle orientation) {
  matrix m(r, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool keep =
          orientation == triangle::upper ? (j >= i) : (j <= i);
      if (keep) m.set(i, j, random_value(g, r));
    }
  }
  return m;
}

matrix random_zero_diag_matrix(rng& g, const ring_desc& r, std::size_t n) {
  matrix m = random_matrix(g, r, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring_value::zero(r));
  return m;
}

matrix random_trace_zero_triangular(rng& g, const ring_desc& r, std::size_t n,
                                    triangle orientation) {
  matrix m = random_triangular_matrix(g, r, n, orientation);
  ring_value s = ring_value::zero(r);
  for (std::size_t i = 0; i + 1 < n; ++i) s = s + m.at(i, i);
  m.set(n - 1, n - 1, -s);
  return m;
}

}  // namespace commfact
