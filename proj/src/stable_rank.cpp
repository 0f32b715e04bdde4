#include "commfact/stable_rank.hpp"

#include <stdexcept>
#include <string>

#include "commfact/division_two.hpp"
#include "commfact/elimination.hpp"
#include "commfact/errors.hpp"
#include "commfact/kernels.hpp"
#include "commfact/triangular.hpp"

namespace commfact {

namespace {

void require_division(const ring_desc& r, const char* what) {
  if (!r.is_division_ring())
    fail(errc::unsupported_ring,
         std::string(what) + " requires a division ring, got " + r.str());
}

void internal_check(bool ok, const char* what) {
  if (!ok)
    throw std::logic_error(std::string("internal factorization check failed: ") +
                           what);
}

}  // namespace

triangular_decomposition vw_decompose(const matrix& a) {
  require_division(a.ring(), "triangular decomposition");
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();
  const ring_value one = ring_value::one(ring);

  matrix b = a;
  matrix lower = matrix::identity(ring, n);  // unit lower multipliers
  matrix r_inv = matrix::identity(ring, n);  // inverse of the column fixups

  for (std::size_t k = 0; k < n; ++k) {
    if (b.at(k, k).is_zero()) {
      // Repair: add a later column carrying a nonzero pivot-row entry.
      std::size_t j = k + 1;
      while (j < n && b.at(k, j).is_zero()) ++j;
      if (j == n)
        fail(errc::singular,
             "matrix is singular (rank " + std::to_string(rank(a)) + " of " +
                 std::to_string(n) + ")");
      for (std::size_t i = 0; i < n; ++i)
        b.set(i, k, b.at(i, k) + b.at(i, j));
      // r_inv tracks (I - e_{jk}) · ... accumulated on the left.
      for (std::size_t t = 0; t < n; ++t)
        r_inv.set(j, t, r_inv.at(j, t) - r_inv.at(k, t));
    }
    const ring_value pinv = b.at(k, k).inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (b.at(i, k).is_zero()) continue;
      const ring_value m = b.at(i, k) * pinv;
      for (std::size_t t = 0; t < n; ++t)
        b.set(i, t, b.at(i, t) - m * b.at(k, t));
      lower.set(i, k, m);
    }
  }

  // b is now upper triangular with invertible diagonal: a·R = lower·b.
  // Split the pivots out of b so the middle factor has a unit diagonal.
  matrix x(ring, n), y(ring, n);
  for (std::size_t j = 0; j < n; ++j) {
    const ring_value d = b.at(j, j);
    for (std::size_t i = 0; i < n; ++i) x.set(i, j, lower.at(i, j) * d);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const ring_value dinv = b.at(i, i).inv();
    for (std::size_t j = 0; j < n; ++j) y.set(i, j, dinv * b.at(i, j));
  }

  triangular_decomposition out{x, y, r_inv};
  internal_check(out.x.is_lower_triangular(), "x lower triangular");
  internal_check(out.y.is_upper_triangular(), "y upper triangular");
  internal_check(out.z.is_lower_triangular(), "z lower triangular");
  internal_check(out.x * out.y * out.z == a, "x·y·z equals input");
  return out;
}

column_reduction khermite_column_reduce(const matrix& a) {
  require_division(a.ring(), "column reduction");
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();

  matrix b = a;
  matrix q = matrix::identity(ring, n);
  matrix q_inv = matrix::identity(ring, n);

  for (std::size_t i = 0; i < n; ++i) {
    if (b.at(i, i).is_zero()) {
      std::size_t j = i + 1;
      while (j < n && b.at(i, j).is_zero()) ++j;
      if (j == n) continue;  // whole tail of row i already zero
      for (std::size_t r = 0; r < n; ++r) {
        ring_value tmp = b.at(r, i);
        b.set(r, i, b.at(r, j));
        b.set(r, j, tmp);
        tmp = q.at(r, i);
        q.set(r, i, q.at(r, j));
        q.set(r, j, tmp);
      }
      for (std::size_t t = 0; t < n; ++t) {
        ring_value tmp = q_inv.at(i, t);
        q_inv.set(i, t, q_inv.at(j, t));
        q_inv.set(j, t, tmp);
      }
    }
    const ring_value pinv = b.at(i, i).inv();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (b.at(i, j).is_zero()) continue;
      const ring_value c = -(pinv * b.at(i, j));
      for (std::size_t r = 0; r < n; ++r) {
        b.set(r, j, b.at(r, j) + b.at(r, i) * c);
        q.set(r, j, q.at(r, j) + q.at(r, i) * c);
      }
      for (std::size_t t = 0; t < n; ++t)
        q_inv.set(i, t, q_inv.at(i, t) - c * q_inv.at(j, t));
    }
  }

  column_reduction out{b, q, q_inv};
  internal_check(out.x.is_lower_triangular(), "reduced matrix lower triangular");
  internal_check(a * out.q == out.x, "a·q equals the reduced matrix");
  internal_check(out.q * out.q_inv == matrix::identity(ring, n),
                 "column transform inverse");
  return out;
}

bc_result bc_similarity(const matrix& a) {
  require_division(a.ring(), "triangular-pair similarity");
  const ring_desc& ring = a.ring();

  if (is_invertible(a)) {
    triangular_decomposition tri = vw_decompose(a);
    matrix w = tri.z;
    matrix w_inv = invert(tri.z);
    bc_result out{{w, w_inv}, tri.z * tri.x, tri.y};
    internal_check(out.w.v * a * out.w.v_inv == out.b * out.c,
                   "conjugated input equals b·c");
    return out;
  }

  // Singular input: column-reduce to a·q = x, then decompose q^{-1} and pull
  // everything to one side.  A zero last row of a survives into b.
  column_reduction kh = khermite_column_reduce(a);
  triangular_decomposition tri = vw_decompose(kh.q_inv);
  matrix w = tri.z;
  matrix w_inv = invert(tri.z);
  bc_result out{{w, w_inv}, tri.z * (kh.x * tri.x), tri.y};
  internal_check(out.b.is_lower_triangular(), "b lower triangular");
  internal_check(out.w.v * a * out.w.v_inv == out.b * out.c,
                 "conjugated input equals b·c");
  return out;
}

commutator_certificate invertible_three_commutators(const matrix& a) {
  require_division(a.ring(), "three-commutator factorization");
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();
  if (n < 3)
    fail(errc::size, "three-commutator factorization needs size at least 3");

  // Feasibility before any heavy work, so small fields report the real
  // obstruction: n distinct central scalars and n invertible zero-sum ones.
  distinct_central(ring, n);
  std::vector<ring_value> e_vals = invertible_zero_sum(ring, n);

  if (!is_invertible(a))
    fail(errc::singular, "input must be invertible for this route");

  bc_result bc = bc_similarity(a);

  matrix e(ring, n), e_inv(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    e.set(i, i, e_vals[i]);
    e_inv.set(i, i, e_vals[i].inv());
  }

  matrix t2 = bc.b * e_inv;  // lower triangular, invertible
  matrix t1 = e * bc.c;      // upper triangular, zero-sum diagonal

  commutator_certificate tri = triangular_two_commutators(t2, triangle::lower);
  auto [x1, y1] = tracezero_triangular_commutator(t1, triangle::upper);

  commutator_certificate cert{a, bc.w, {}, "Thm 3.7"};
  cert.pairs.push_back(tri.pairs[0]);
  cert.pairs.push_back(tri.pairs[1]);
  cert.pairs.push_back({x1, y1, false, false});

  verify_report rep = verify_certificate(cert);
  if (!rep.ok)
    throw std::logic_error("three-commutator certificate failed internal "
                           "verification: " +
                           rep.reason);
  return cert;
}

commutator_certificate singular_two_commutators(const matrix& a) {
  require_division(a.ring(), "singular two-commutator factorization");
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();

  if (is_invertible(a))
    fail(errc::not_singular, "input must be singular for this route");

  if (n == 1) {
    // The only singular 1x1 matrix is 0 = [0,0]·[0,0].
    commutator_certificate cert{a, std::nullopt, {}, "Prop 4.8"};
    cert.pairs.push_back({matrix(ring, 1), matrix(ring, 1), false, false});
    cert.pairs.push_back({matrix(ring, 1), matrix(ring, 1), false, false});
    return cert;
  }
  if (n == 2) return two_commutators_2x2(a);

  if (ring.is_field() && ring.characteristic() == 2)
    fail(errc::field_too_small,
         "singular route needs a base field with at least 3 elements");

  // Conjugate a left kernel row into the last coordinate.
  std::vector<ring_value> u = left_kernel_row(a);
  std::size_t m = 0;
  while (u[m].is_zero()) ++m;
  matrix p(ring, n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == m) continue;
    p.set(row++, j, ring_value::one(ring));
  }
  for (std::size_t t = 0; t < n; ++t) p.set(n - 1, t, u[t]);
  matrix p_inv = invert(p);
  matrix a1 = p * a * p_inv;

  bc_result bc = bc_similarity(a1);
  internal_check(bc.b.at(n - 1, n - 1).is_zero(),
                 "zero kernel row reaches the b corner");

  std::vector<ring_value> e_vals = invertible_zero_sum(ring, n - 1);

  // b' = b·diag(e,1)^{-1} with the free corner set to balance the trace;
  // c' = diag(e,1)·c with its corner dropped to zero.  The corner of b'
  // multiplies a zero column and the corner of c' a zero row, so the
  // product is unchanged while both factors become trace-zero triangular.
  matrix bp = bc.b, cp = bc.c;
  ring_value s = ring_value::zero(ring);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const ring_value einv = e_vals[j].inv();
    for (std::size_t i = 0; i < n; ++i) bp.set(i, j, bc.b.at(i, j) * einv);
    s = s + bc.b.at(j, j) * einv;
  }
  bp.set(n - 1, n - 1, -s);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cp.set(i, j, e_vals[i] * bc.c.at(i, j));
  cp.set(n - 1, n - 1, ring_value::zero(ring));
  internal_check(bp * cp == bc.b * bc.c, "corner rebalancing preserves b·c");

  auto [x1, y1] = tracezero_triangular_commutator(bp, triangle::lower);
  auto [x2, y2] = tracezero_triangular_commutator(cp, triangle::upper);

  similarity_witness w{bc.w.v * p, p_inv * bc.w.v_inv};
  commutator_certificate cert{a, w, {}, "Prop 4.8"};
  cert.pairs.push_back({x1, y1, false, false});
  cert.pairs.push_back({x2, y2, false, false});

  verify_report rep = verify_certificate(cert);
  if (!rep.ok)
    throw std::logic_error("singular two-commutator certificate failed "
                           "internal verification: " +
                           rep.reason);
  return cert;
}

}  // namespace commfact
