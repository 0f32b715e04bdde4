#include "commfact/derivation.hpp"

#include <random>
#include <stdexcept>

#include "commfact/elimination.hpp"
#include "commfact/errors.hpp"
#include "commfact/minpoly.hpp"

namespace commfact {

namespace {

void require_field(const ring_desc& r, const char* what) {
  if (!r.is_field())
    fail(errc::unsupported_ring,
         std::string(what) + " requires a field, got " + r.str());
}

void internal_check(bool ok, const char* what) {
  if (!ok)
    throw std::logic_error(std::string("internal derivation check failed: ") +
                           what);
}

matrix der(const matrix& a, const matrix& w) { return commutator(a, w); }

}  // namespace

bool herstein_identity_check(const matrix& a, const matrix& x, const matrix& y,
                             const matrix& z) {
  matrix dy = der(a, y), d2y = der(a, dy), d3y = der(a, d2y);
  matrix dx = der(a, x), dz = der(a, z);

  matrix lhs = x * d3y * z;
  matrix cube = dx * dy * dz;
  matrix rhs = der(a, x * d2y * z) - dx * der(a, dy * z) -
               der(a, x * dy) * dz + cube + cube;
  return lhs == rhs;
}

bool lder_identity_check(const matrix& a, const matrix& b, const matrix& c,
                         const matrix& x, const matrix& z) {
  if (!(der(a, b) * c).is_zero())
    fail(errc::precondition, "[a, b]·c must vanish for this identity");

  matrix lhs = x * der(a, b) * der(a, c) * z;
  matrix rhs = der(a, x * b) * der(a, c * z) - der(a, x) * der(a, b * c * z);
  return lhs == rhs;
}

std::optional<std::vector<ring_value>> krylov_witness(const matrix& a) {
  require_field(a.ring(), "krylov witness");
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();

  if (minimal_polynomial(a).degree() <= 2) return std::nullopt;

  // 0/1 vectors in binary-counter order first (exhaustive over GF(2)).
  if (n < 20) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<ring_value> v(n, ring_value::zero(ring));
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) v[i] = ring_value::one(ring);
      if (local_degree(a, v) >= 3) return v;
    }
  }

  // Deterministic seeded fallback through the canonical field enumeration.
  std::mt19937_64 g(0x636f6d6d66616374ull);
  for (int tries = 0; tries < 10000; ++tries) {
    std::vector<ring_value> v(n, ring_value::zero(ring));
    for (std::size_t i = 0; i < n; ++i) {
      auto s = field_sequence_at(ring.base(), g() % 9);
      if (s) v[i] = ring_value::from_field(*s);
    }
    if (local_degree(a, v) >= 3) return v;
  }
  throw std::logic_error(
      "no vector of local degree 3 found although the minimal polynomial has "
      "degree at least 3");
}

rank_one_witness lder2_witness(const matrix& a) {
  require_field(a.ring(), "rank-one derivation witness");
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();

  auto v = krylov_witness(a);
  if (!v)
    fail(errc::degree_too_low,
         "minimal polynomial must have degree at least 3");

  std::vector<ring_value> av = matrix_times_col(a, *v);
  std::vector<ring_value> a2v = matrix_times_col(a, av);

  // Solve f·v = 0, f·av = 0, f·a²v = 1 by elimination; free variables stay
  // zero.  The system has full row rank because the local degree is 3.
  const ring_value zero = ring_value::zero(ring);
  const ring_value one = ring_value::one(ring);
  std::vector<std::vector<ring_value>> rows(3,
                                            std::vector<ring_value>(n + 1, zero));
  for (std::size_t j = 0; j < n; ++j) {
    rows[0][j] = (*v)[j];
    rows[1][j] = av[j];
    rows[2][j] = a2v[j];
  }
  rows[2][n] = one;

  std::vector<std::size_t> pivot_col(3, n);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < 3; ++c) {
    std::size_t pr = r;
    while (pr < 3 && rows[pr][c].is_zero()) ++pr;
    if (pr == 3) continue;
    std::swap(rows[r], rows[pr]);
    const ring_value pinv = rows[r][c].inv();
    for (std::size_t j = c; j <= n; ++j) rows[r][j] = pinv * rows[r][j];
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const ring_value m = rows[i][c];
      for (std::size_t j = c; j <= n; ++j)
        rows[i][j] = rows[i][j] - m * rows[r][j];
    }
    pivot_col[r] = c;
    ++r;
  }
  internal_check(r == 3, "krylov rows have full rank");

  std::vector<ring_value> f(n, zero);
  for (std::size_t i = 0; i < 3; ++i) f[pivot_col[i]] = rows[i][n];

  matrix b(ring, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set(i, j, (*v)[i] * f[j]);

  matrix ab = commutator(a, b);
  internal_check((b * b).is_zero(), "b squares to zero");
  internal_check((b * a * b).is_zero(), "b·a·b vanishes");
  internal_check(b * a * a * b == b, "b·a²·b recovers b");
  internal_check((ab * b).is_zero(), "[a,b]·b vanishes");
  internal_check(ab * ab == -b, "[a,b]² equals -b");

  return {*v, f, b};
}

std::vector<std::pair<matrix, matrix>> tder_decompose(const matrix& a,
                                                      const matrix& x) {
  require_field(a.ring(), "derivation-pair decomposition");
  if (x.ring() != a.ring()) fail(errc::ring_mismatch, "a and x ring differ");
  if (x.size() != a.size()) fail(errc::shape, "a and x size differ");
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();

  if (x.is_zero()) return {};

  rank_one_witness wit = lder2_witness(a);
  std::vector<ring_value> av = matrix_times_col(a, wit.v);
  std::vector<ring_value> a2v = matrix_times_col(a, av);

  std::size_t m = 0;
  while (wit.v[m].is_zero()) ++m;
  const ring_value neg_vm_inv = -wit.v[m].inv();

  std::vector<std::pair<matrix, matrix>> pairs;
  pairs.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    matrix rj = matrix::unit(ring, n, j, m, neg_vm_inv);
    matrix sj(ring, n);
    for (std::size_t i = 0; i < n; ++i) sj.set(i, j, a2v[i]);
    pairs.emplace_back(x * rj * wit.b, wit.b * sj);
  }

  matrix sum(ring, n);
  for (const auto& [p, q] : pairs)
    sum = sum + commutator(a, p) * commutator(a, q);
  internal_check(sum == x, "derivation pairs sum back to the target");
  return pairs;
}

span_report product_span_dim(const matrix& a) {
  require_field(a.ring(), "commutator product span");
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();
  const ring_value one = ring_value::one(ring);

  std::vector<matrix> ders;
  ders.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ders.push_back(commutator(a, matrix::unit(ring, n, i, j, one)));

  span_builder span(ring, n * n);
  span_report rep{0, false, minimal_polynomial(a).degree(), {}};
  for (const matrix& d1 : ders) {
    for (const matrix& d2 : ders) {
      matrix p = d1 * d2;
      std::vector<ring_value> flat;
      flat.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(p.at(i, j));
      if (span.insert(flat)) rep.basis.push_back(std::move(p));
    }
  }
  rep.dimension = span.rank();
  rep.full = rep.dimension == n * n;

  internal_check(rep.full == (rep.minpoly_degree > 2),
                 "span fullness matches the minimal-polynomial dichotomy");
  return rep;
}

}  // namespace commfact
