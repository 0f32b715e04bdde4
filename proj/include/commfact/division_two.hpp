#pragma once

#include <cstddef>
#include <utility>

#include "commfact/certificate.hpp"
#include "commfact/matrix.hpp"

namespace commfact {

// (b, c) with [b, c] = [[r, s], [t, -r]] and b invertible, over any division
// ring.  Four branches keyed on which of r, s, t vanish; each divides only
// by entries that branch guarantees nonzero.
std::pair<matrix, matrix> sl2_commutator(const ring_value& r,
                                         const ring_value& s,
                                         const ring_value& t);

// Any 2x2 matrix over a division ring as a product of exactly two
// commutators; the first commutator and both pair leads are invertible.
commutator_certificate two_commutators_2x2(const matrix& a);

// 1 = [b, c]·[d, e] with [b, c], b and d invertible.  Assembled from 2x2 and
// 3x3 blocks; needs at least 3 elements in the base field.
commutator_certificate identity_two_commutators(const ring_desc& ring,
                                                std::size_t n);

// Invertible v with (v·a·v^{-1})_{00} = 0, for a not a scalar multiple of
// the identity by a central element.  Searches w in {e_i} then {e_i + e_j};
// a noncentral scalar matrix is first bumped off the scalars by an
// elementary conjugation.  E_CENTRAL when a is central.
similarity_witness corner_zero_similarity(const matrix& a);

// Smallest central scalar from 1, 2, 3, ... with v - λ invertible.
// E_FIELD_TOO_SMALL when a finite supply is exhausted.
ring_value central_singular_avoid(const matrix& v);

struct two_comm_stats {
  std::size_t levels = 0;  // deepest recursion level reached
};

// Every n x n matrix (n >= 2) over the rational quaternions as a product of
// exactly two commutators, by induction on a corner-zeroed form.  The
// similarity witnesses produced along the way are folded into the pairs, so
// the certificate carries pairs only.
commutator_certificate two_commutators(const matrix& a,
                                       two_comm_stats* stats = nullptr);

}  // namespace commfact
