#pragma once

#include <cstdint>
#include <random>

#include "commfact/matrix.hpp"

namespace commfact {

// Deterministic generator: fixed engine, modulo sampling (never the standard
// distributions, whose outputs vary across library implementations).
class rng {
 public:
  explicit rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }
  std::uint64_t below(std::uint64_t bound) { return g_() % bound; }
  long int_range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 g_;
};

// Small exact scalars: numerators in [-9, 9] with denominators in [1, 4]
// over ℚ, uniform residues over GF(p), componentwise for the compound rings.
field_scalar random_field_scalar(rng& g, field_desc d);
ring_value random_value(rng& g, const ring_desc& r);
ring_value random_invertible_value(rng& g, const ring_desc& r);

matrix random_matrix(rng& g, const ring_desc& r, std::size_t n);
// Rejection sampling; division rings only.
matrix random_invertible_matrix(rng& g, const ring_desc& r, std::size_t n);
// Last row forced into the left span of the others (n >= 2).
matrix random_singular_matrix(rng& g, const ring_desc& r, std::size_t n);
matrix random_triangular_matrix(rng& g, const ring_desc& r, std::size_t n,
                                triangle orientation);
matrix random_zero_diag_matrix(rng& g, const ring_desc& r, std::size_t n);
matrix random_trace_zero_triangular(rng& g, const ring_desc& r, std::size_t n,
                                    triangle orientation);

}  // namespace commfact
