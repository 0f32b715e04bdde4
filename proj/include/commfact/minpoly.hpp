#pragma once

#include <string>
#include <vector>

#include "commfact/elimination.hpp"
#include "commfact/matrix.hpp"

namespace commfact {

// Dense univariate polynomial over ℚ or GF(p), coefficients low to high with
// no stored leading zeros.
class polynomial {
 public:
  explicit polynomial(field_desc f) : f_(f) {}
  static polynomial from_coeffs(field_desc f, std::vector<field_scalar> c);
  static polynomial constant(field_desc f, const field_scalar& c);

  field_desc base() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  field_scalar coeff(std::size_t k) const;
  bool operator==(const polynomial& o) const;

  polynomial operator+(const polynomial& o) const;
  polynomial operator-(const polynomial& o) const;
  polynomial operator*(const polynomial& o) const;
  // Quotient and remainder; divisor must be nonzero.
  std::pair<polynomial, polynomial> divmod(const polynomial& d) const;
  polynomial monic() const;

  matrix eval(const matrix& a) const;

  std::string str() const;

 private:
  field_desc f_;
  std::vector<field_scalar> c_;
  void trim();
  static void check_same(const polynomial& a, const polynomial& b);
};

polynomial poly_gcd(polynomial a, polynomial b);
polynomial poly_lcm(const polynomial& a, const polynomial& b);

// Minimal polynomial via per-basis-vector Krylov relations combined by lcm;
// no factorization involved. Field coefficient rings only.
polynomial minimal_polynomial(const matrix& a);

// Smallest d with {v, a·v, ..., a^d·v} linearly dependent (0 for v = 0).
std::size_t local_degree(const matrix& a, const std::vector<ring_value>& v);

}  // namespace commfact
