#include "commfact/division_two.hpp"

#include <stdexcept>
#include <string>

#include "commfact/elimination.hpp"
#include "commfact/errors.hpp"

namespace commfact {

namespace {

void require_division(const ring_desc& r, const char* what) {
  if (!r.is_division_ring())
    fail(errc::unsupported_ring,
         std::string(what) + " requires a division ring, got " + r.str());
}

void internal_check(bool ok, const char* what) {
  if (!ok)
    throw std::logic_error(std::string("internal construction check failed: ") +
                           what);
}

matrix mat2(const ring_desc& ring, const ring_value& a00, const ring_value& a01,
            const ring_value& a10, const ring_value& a11) {
  matrix m(ring, 2);
  m.set(0, 0, a00);
  m.set(0, 1, a01);
  m.set(1, 0, a10);
  m.set(1, 1, a11);
  return m;
}

}  // namespace

std::pair<matrix, matrix> sl2_commutator(const ring_value& r,
                                         const ring_value& s,
                                         const ring_value& t) {
  const ring_desc ring = r.ring();
  if (s.ring() != ring || t.ring() != ring)
    fail(errc::ring_mismatch, "sl2 entries must share one ring");
  require_division(ring, "sl2 commutator");

  const ring_value zero = ring_value::zero(ring);
  const ring_value one = ring_value::one(ring);

  matrix b(ring, 2), c(ring, 2);
  if (s.is_zero()) {
    b = mat2(ring, one, zero, one, one);
    c = mat2(ring, zero, -r, zero, -t);
  } else if (t.is_zero()) {
    b = mat2(ring, one, one, zero, one);
    c = mat2(ring, zero, zero, r, s);
  } else if (r.is_zero()) {
    b = mat2(ring, zero, -s, t, zero);
    c = mat2(ring, one, zero, zero, zero);
  } else {
    b = mat2(ring, zero, -(s * r * t.inv()), r, zero);
    c = mat2(ring, zero, -one, zero, -(t * r.inv()));
  }

  matrix target = mat2(ring, r, s, t, -r);
  internal_check(commutator(b, c) == target, "sl2 commutator equals target");
  internal_check(is_invertible(b), "sl2 lead factor invertible");
  return {b, c};
}

commutator_certificate two_commutators_2x2(const matrix& a) {
  require_division(a.ring(), "2x2 two-commutator route");
  if (a.size() != 2) fail(errc::size, "this route handles 2x2 matrices only");

  const ring_desc& ring = a.ring();
  const ring_value zero = ring_value::zero(ring);
  const ring_value one = ring_value::one(ring);
  const ring_value r = a.at(0, 0), s = a.at(0, 1), t = a.at(1, 0),
                   u = a.at(1, 1);

  // a = m1 · m2 with both factors trace zero and m1 invertible.
  matrix m1(ring, 2), m2(ring, 2);
  if (!s.is_zero() && !t.is_zero()) {
    m1 = mat2(ring, zero, -(s * t.inv()), one, zero);
    m2 = mat2(ring, t, u, -(t * s.inv() * r), -t);
  } else if (s.is_zero() && !t.is_zero()) {
    const ring_value g = (u - r) * t.inv();
    m1 = mat2(ring, one, g, zero, -one);
    m2 = mat2(ring, u, g * u, -t, -u);
  } else if (!s.is_zero() && t.is_zero()) {
    const ring_value g = (u - r) * s.inv();
    m1 = mat2(ring, one, zero, g, -one);
    m2 = mat2(ring, r, s, g * r, -r);
  } else {
    m1 = mat2(ring, zero, one, one, zero);
    m2 = mat2(ring, zero, u, r, zero);
  }
  internal_check(m1 * m2 == a, "trace-zero factor product equals input");

  auto [b1, c1] = sl2_commutator(m1.at(0, 0), m1.at(0, 1), m1.at(1, 0));
  auto [b2, c2] = sl2_commutator(m2.at(0, 0), m2.at(0, 1), m2.at(1, 0));

  commutator_certificate cert{a, std::nullopt, {}, "Prop 4.2"};
  cert.pairs.push_back({b1, c1, true, true});
  cert.pairs.push_back({b2, c2, false, true});
  return cert;
}

namespace {

struct identity_pairs {
  matrix b, c, d, e;  // [b,c]·[d,e] = 1 with [b,c], b, d invertible
};

// 2x2 block: [b2, c2] = antidiag(1, 1), which squares to the identity, so
// the same pair is used twice.
void place_block2(const ring_desc& ring, matrix& b, matrix& c, matrix& d,
                  matrix& e, std::size_t off) {
  const ring_value one = ring_value::one(ring);
  b.set(off + 0, off + 1, -one);
  b.set(off + 1, off + 0, one);
  c.set(off + 0, off + 0, one);
  d.set(off + 0, off + 1, -one);
  d.set(off + 1, off + 0, one);
  e.set(off + 0, off + 0, one);
}

// 3x3 block: [b3, c3] = P (3-cycle permutation), [d3, e3] = flip(P) = P^{-1}.
// Uses the scalars 2 and 1 = 2 - 1, so the base field must have a third
// element (2 != 0).
void place_block3(const ring_desc& ring, matrix& b, matrix& c, matrix& d,
                  matrix& e, std::size_t off) {
  const ring_value one = ring_value::one(ring);
  const ring_value x = ring_value::from_int(ring, 2);
  const ring_value y = x - one;

  b.set(off + 0, off + 2, -x);
  b.set(off + 1, off + 0, one);
  b.set(off + 2, off + 1, y);
  c.set(off + 0, off + 2, one);
  c.set(off + 2, off + 1, -one);

  d.set(off + 0, off + 1, y);
  d.set(off + 1, off + 2, one);
  d.set(off + 2, off + 0, -x);
  e.set(off + 0, off + 1, -one);
  e.set(off + 2, off + 0, one);
}

identity_pairs make_identity_pairs(const ring_desc& ring, std::size_t n) {
  if (ring.is_field() && ring.characteristic() == 2)
    fail(errc::field_too_small,
         "identity factorization needs a base field with at least 3 elements");
  require_division(ring, "identity factorization");
  if (n < 2)
    fail(errc::size, "identity factorization needs size at least 2");

  // n = 2k + 3l with l = n mod 2; 2x2 blocks first, then the 3x3 block.
  const std::size_t l = n % 2;
  const std::size_t k = (n - 3 * l) / 2;

  matrix b(ring, n), c(ring, n), d(ring, n), e(ring, n);
  std::size_t off = 0;
  for (std::size_t i = 0; i < k; ++i, off += 2)
    place_block2(ring, b, c, d, e, off);
  for (std::size_t i = 0; i < l; ++i, off += 3)
    place_block3(ring, b, c, d, e, off);

  internal_check(commutator(b, c) * commutator(d, e) ==
                     matrix::identity(ring, n),
                 "identity pair product");
  return {b, c, d, e};
}

}  // namespace

commutator_certificate identity_two_commutators(const ring_desc& ring,
                                                std::size_t n) {
  identity_pairs p = make_identity_pairs(ring, n);
  commutator_certificate cert{matrix::identity(ring, n), std::nullopt, {},
                              "Lemma 4.3"};
  cert.pairs.push_back({p.b, p.c, true, true});
  cert.pairs.push_back({p.d, p.e, false, true});
  return cert;
}

namespace {

// Search part of the corner-zeroing similarity: find w with {w, aw} right
// independent, extend to a basis by standard vectors, and conjugate so the
// new (0,0) entry is 0 (the first basis column maps to the second).
std::optional<similarity_witness> corner_zero_search(const matrix& a) {
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();
  const ring_value one = ring_value::one(ring);

  std::vector<std::vector<ring_value>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ring_value> w(n, ring_value::zero(ring));
    w[i] = one;
    candidates.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<ring_value> w(n, ring_value::zero(ring));
      w[i] = one;
      w[j] = one;
      candidates.push_back(std::move(w));
    }
  }

  for (const auto& w : candidates) {
    std::vector<ring_value> aw = matrix_times_col(a, w);
    span_builder span(ring, n);
    span.insert(w);
    if (!span.insert(aw)) continue;  // aw is a right multiple of w

    std::vector<std::vector<ring_value>> cols{w, aw};
    for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
      std::vector<ring_value> ei(n, ring_value::zero(ring));
      ei[i] = one;
      if (span.insert(ei)) cols.push_back(std::move(ei));
    }
    internal_check(cols.size() == n, "corner-zero basis completion");

    matrix u(ring, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) u.set(i, j, cols[j][i]);
    matrix u_inv = invert(u);
    similarity_witness wit{u_inv, u};  // transformed = v · a · v_inv
    internal_check((wit.v * a * wit.v_inv).at(0, 0).is_zero(),
                   "corner entry vanishes after conjugation");
    return wit;
  }
  return std::nullopt;
}

}  // namespace

similarity_witness corner_zero_similarity(const matrix& a) {
  require_division(a.ring(), "corner-zeroing similarity");
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();

  if (a.at(0, 0).is_zero())
    return {matrix::identity(ring, n), matrix::identity(ring, n)};

  if (auto wit = corner_zero_search(a)) return *wit;

  // Every candidate failed, so a acts as a scalar lambda on the right.
  const ring_value lambda = a.at(0, 0);
  internal_check(a == matrix::identity(ring, n).scaled_left(lambda),
                 "search exhaustion implies scalar matrix");
  if (lambda.is_central())
    fail(errc::central,
         "matrix is central; conjugation cannot zero a corner entry");

  // Noncentral scalar (quaternion case): conjugating by 1 + d·E_{01} with
  // d·lambda != lambda·d puts the nonzero commutator in slot (0,1), after
  // which the search succeeds.
  for (int comp = 1; comp <= 2; ++comp) {
    ring_value d = ring_value::quaternion_value(0, comp == 1 ? 1 : 0,
                                                comp == 2 ? 1 : 0, 0);
    if ((d * lambda - lambda * d).is_zero()) continue;
    matrix m = matrix::identity(ring, n);
    m.set(0, 1, d);
    matrix m_inv = matrix::identity(ring, n);
    m_inv.set(0, 1, -d);
    matrix bumped = m * a * m_inv;
    auto wit = corner_zero_search(bumped);
    internal_check(wit.has_value(), "bumped scalar matrix admits a corner zero");
    return {wit->v * m, m_inv * wit->v_inv};
  }
  throw std::logic_error("noncentral scalar commutes with both i and j");
}

ring_value central_singular_avoid(const matrix& v) {
  require_division(v.ring(), "spectrum-avoiding scalar");
  const ring_desc& ring = v.ring();
  const std::size_t m = v.size();
  // Over a field at most m central scalars put v - λ in the singular locus;
  // over the quaternions the bound is 2m (central roots of a degree-2m
  // polynomial over the center).
  const std::size_t bound =
      (ring.kind() == ring_kind::quaternion ? 2 * m : m) + 1;

  for (std::size_t k = 1;; ++k) {
    std::optional<ring_value> cand = central_positive_at(ring, k);
    if (!cand)
      fail(errc::field_too_small,
           "no central scalar in the field avoids the matrix spectrum");
    if (is_invertible(v - matrix::identity(ring, m).scaled_left(*cand)))
      return *cand;
    if (k > bound)
      throw std::logic_error("spectrum avoidance exceeded its candidate bound");
  }
}

namespace {

matrix block_diag(const ring_value& s, const matrix& m) {
  matrix out(m.ring(), m.size() + 1);
  out.set(0, 0, s);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out.set(i + 1, j + 1, m.at(i, j));
  return out;
}

struct two_pair_result {
  commutator_pair first, second;
};

two_pair_result two_comm_core(const matrix& a, std::size_t depth,
                              std::size_t& max_depth);

// Case a = λ·1 with λ central: factor the identity and absorb λ into the
// second pair's right member ([d, λe] = λ[d, e]); the zero matrix pairs an
// invertible commutator with [1, 0] = 0.
two_pair_result central_case(const matrix& a, const ring_value& lambda) {
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();
  if (lambda.is_zero()) {
    identity_pairs p = make_identity_pairs(ring, n);
    return {{p.b, p.c, true, true},
            {matrix::identity(ring, n), matrix(ring, n), false, true}};
  }
  identity_pairs p = make_identity_pairs(ring, n);
  return {{p.b, p.c, true, true},
          {p.d, p.e.scaled_left(lambda), false, true}};
}

two_pair_result two_comm_core(const matrix& a, std::size_t depth,
                              std::size_t& max_depth) {
  if (depth > max_depth) max_depth = depth;
  const ring_desc& ring = a.ring();
  const std::size_t n = a.size();

  if (n == 2) {
    commutator_certificate base = two_commutators_2x2(a);
    return {base.pairs[0], base.pairs[1]};
  }

  if (auto lambda = a.central_scalar()) return central_case(a, *lambda);

  // Conjugate the (0,0) entry to zero, split off the first row/column, and
  // recurse on the trailing block.
  similarity_witness v0 = corner_zero_similarity(a);
  matrix ap = v0.v * a * v0.v_inv;

  matrix x(ring, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) x.set(i, j, ap.at(i + 1, j + 1));

  two_pair_result rec = two_comm_core(x, depth + 1, max_depth);
  const matrix& bx = rec.first.x;
  const matrix& cx = rec.first.y;
  const matrix& vb = rec.second.x;  // invertible by the recursive guarantee
  const matrix& wb = rec.second.y;

  matrix y = commutator(bx, cx);  // invertible by the recursive guarantee
  matrix y_inv = invert(y);

  auto [p, q] = nonzero_commutator_pair(ring);
  ring_value d0 = p * q - q * p;
  ring_value d0_inv = d0.inv();

  ring_value lambda = central_singular_avoid(vb);
  matrix vml = vb - matrix::identity(ring, n - 1).scaled_left(lambda);
  matrix vml_inv = invert(vml);
  matrix lmv_inv = -vml_inv;  // (λ - v)^{-1}

  std::vector<ring_value> beta(n - 1, ring_value::zero(ring));
  std::vector<ring_value> gamma(n - 1, ring_value::zero(ring));
  for (std::size_t j = 0; j + 1 < n; ++j) beta[j] = ap.at(0, j + 1);
  for (std::size_t i = 0; i + 1 < n; ++i) gamma[i] = ap.at(i + 1, 0);

  // First pair: [diag(p, bx), diag(q, cx)] = diag([p,q], [bx,cx]).
  matrix p1x = block_diag(p, bx);
  matrix p1y = block_diag(q, cx);

  // Second pair: diag(λ, v) against the bordered block; the commutator's
  // border recovers d0^{-1}β and y^{-1}γ, and the product with the first
  // commutator restores ap exactly.
  matrix p2x = block_diag(lambda, vb);
  matrix p2y(ring, n);
  std::vector<ring_value> rho = row_times_matrix(beta, lmv_inv);
  std::vector<ring_value> kappa =
      matrix_times_col(vml_inv, matrix_times_col(y_inv, gamma));
  for (std::size_t j = 0; j + 1 < n; ++j) p2y.set(0, j + 1, d0_inv * rho[j]);
  for (std::size_t i = 0; i + 1 < n; ++i) p2y.set(i + 1, 0, kappa[i]);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) p2y.set(i + 1, j + 1, wb.at(i, j));

  // Fold the similarity into the pairs: a = v_inv · ap · v and conjugation
  // commutes with commutators and products.
  matrix f1x = v0.v_inv * p1x * v0.v;
  matrix f1y = v0.v_inv * p1y * v0.v;
  matrix f2x = v0.v_inv * p2x * v0.v;
  matrix f2y = v0.v_inv * p2y * v0.v;

  internal_check(commutator(f1x, f1y) * commutator(f2x, f2y) == a,
                 "two-commutator product equals input");
  return {{f1x, f1y, true, true}, {f2x, f2y, false, true}};
}

}  // namespace

commutator_certificate two_commutators(const matrix& a, two_comm_stats* stats) {
  if (a.ring().kind() != ring_kind::quaternion)
    fail(errc::unsupported_ring,
         "two-commutator factorization needs a noncommutative division ring");
  if (a.size() < 2)
    fail(errc::size, "two-commutator factorization needs size at least 2");

  std::size_t max_depth = 0;
  two_pair_result pairs = two_comm_core(a, 1, max_depth);
  if (stats) stats->levels = max_depth;

  commutator_certificate cert{a, std::nullopt, {}, "Thm 4.5"};
  cert.pairs.push_back(pairs.first);
  cert.pairs.push_back(pairs.second);
  return cert;
}

}  // namespace commfact
