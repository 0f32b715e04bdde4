#include "commfact/certificate.hpp"

#include "commfact/elimination.hpp"

namespace commfact {

namespace {

verify_report failure(std::string reason) {
  verify_report r;
  r.ok = false;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

verify_report verify_certificate(const commutator_certificate& cert) {
  const matrix& a = cert.target;
  const std::size_t n = a.size();
  const ring_desc& ring = a.ring();

  auto shaped = [&](const matrix& m) { return m.size() == n && m.ring() == ring; };

  if (cert.similarity) {
    if (!shaped(cert.similarity->v) || !shaped(cert.similarity->v_inv)) {
      return failure("similarity witness has wrong shape or ring");
    }
    const matrix id = matrix::identity(ring, n);
    if (cert.similarity->v * cert.similarity->v_inv != id ||
        cert.similarity->v_inv * cert.similarity->v != id) {
      return failure("similarity witness fails v·v_inv = v_inv·v = 1");
    }
  }

  matrix product = matrix::identity(ring, n);
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    const commutator_pair& p = cert.pairs[i];
    if (!shaped(p.x) || !shaped(p.y)) {
      return failure("pair " + std::to_string(i) + " has wrong shape or ring");
    }
    matrix c = commutator(p.x, p.y);
    if (p.commutator_invertible && !is_invertible(c)) {
      return failure("pair " + std::to_string(i) +
                     " claims an invertible commutator, but [x,y] is singular");
    }
    if (p.x_invertible && !is_invertible(p.x)) {
      return failure("pair " + std::to_string(i) +
                     " claims invertible x, but x is singular");
    }
    product = product * c;
  }

  if (cert.similarity) {
    product = cert.similarity->v_inv * product * cert.similarity->v;
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (product.at(i, j) != a.at(i, j)) {
        verify_report r = failure(
            "product of commutators differs from the target at entry (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
        r.first_mismatch = {i, j};
        return r;
      }
    }
  }
  return verify_report{};
}

}  // namespace commfact
