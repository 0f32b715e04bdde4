#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commfact/matrix.hpp"

namespace commfact {

// Invertible change of basis stored together with its inverse so that
// verification never has to invert anything.
struct similarity_witness {
  matrix v;
  matrix v_inv;
};

// One ordered factor [x, y] of a product of commutators, with optional
// invertibility claims: about the commutator itself and about x.
struct commutator_pair {
  matrix x;
  matrix y;
  bool commutator_invertible = false;
  bool x_invertible = false;
};

// Claim: target = v^{-1} · ( Π_i [x_i, y_i] ) · v, with v = 1 when no
// similarity is present, plus the per-pair invertibility claims.
struct commutator_certificate {
  matrix target;
  std::optional<similarity_witness> similarity;
  std::vector<commutator_pair> pairs;
  std::string theorem;  // routing tag for reports and the CLI
};

struct verify_report {
  bool ok = true;
  std::string reason;
  // Row/column of the first mismatching entry when the product check fails.
  std::optional<std::pair<std::size_t, std::size_t>> first_mismatch;
};

// Recomputes every commutator, multiplies in order, conjugates by the stored
// witness and compares entrywise; checks the flagged invertibility claims.
verify_report verify_certificate(const commutator_certificate& cert);

}  // namespace commfact
