#include "commfact/minpoly.hpp"

namespace commfact {

void polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

polynomial polynomial::from_coeffs(field_desc f, std::vector<field_scalar> c) {
  polynomial p(f);
  for (const auto& s : c) {
    if (!(s.desc() == f)) fail(errc::ring_mismatch, "coefficient from wrong field");
  }
  p.c_ = std::move(c);
  p.trim();
  return p;
}

polynomial polynomial::constant(field_desc f, const field_scalar& c) {
  return from_coeffs(f, {c});
}

field_scalar polynomial::coeff(std::size_t k) const {
  if (k < c_.size()) return c_[k];
  return field_scalar::zero(f_);
}

bool polynomial::operator==(const polynomial& o) const {
  return f_ == o.f_ && c_ == o.c_;
}

void polynomial::check_same(const polynomial& a, const polynomial& b) {
  if (!(a.f_ == b.f_)) fail(errc::ring_mismatch, "polynomials over different fields");
}

polynomial polynomial::operator+(const polynomial& o) const {
  check_same(*this, o);
  polynomial r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), field_scalar::zero(f_));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(k) + o.coeff(k);
  r.trim();
  return r;
}

polynomial polynomial::operator-(const polynomial& o) const {
  check_same(*this, o);
  polynomial r(f_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), field_scalar::zero(f_));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(k) - o.coeff(k);
  r.trim();
  return r;
}

polynomial polynomial::operator*(const polynomial& o) const {
  check_same(*this, o);
  polynomial r(f_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, field_scalar::zero(f_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

std::pair<polynomial, polynomial> polynomial::divmod(const polynomial& d) const {
  check_same(*this, d);
  if (d.is_zero()) fail(errc::precondition, "polynomial division by zero");
  polynomial q(f_), r = *this;
  if (r.degree() < d.degree()) return {q, r};
  q.c_.assign(r.c_.size() - d.c_.size() + 1, field_scalar::zero(f_));
  field_scalar lead_inv = d.c_.back().inv();
  for (int k = r.degree() - d.degree(); k >= 0; --k) {
    field_scalar factor = r.coeff(static_cast<std::size_t>(k + d.degree())) * lead_inv;
    q.c_[static_cast<std::size_t>(k)] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) {
      std::size_t idx = static_cast<std::size_t>(k) + j;
      r.c_[idx] = r.c_[idx] - factor * d.c_[j];
    }
  }
  q.trim();
  r.trim();
  return {q, r};
}

polynomial polynomial::monic() const {
  if (is_zero()) return *this;
  if (c_.back().is_one()) return *this;
  field_scalar s = c_.back().inv();
  polynomial r(f_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * s);
  return r;
}

matrix polynomial::eval(const matrix& a) const {
  if (!a.ring().is_field()) {
    fail(errc::unsupported_ring, "polynomial evaluation needs a field coefficient ring");
  }
  if (!(a.ring().base() == f_)) fail(errc::ring_mismatch, "matrix over a different field");
  matrix acc(a.ring(), a.size());
  for (int k = degree(); k >= 0; --k) {
    acc = acc * a;
    field_scalar ck = coeff(static_cast<std::size_t>(k));
    if (!ck.is_zero()) {
      acc = acc + matrix::identity(a.ring(), a.size()).scaled_left(ring_value::from_field(ck));
    }
  }
  return acc;
}

std::string polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    field_scalar ck = coeff(static_cast<std::size_t>(k));
    if (ck.is_zero()) continue;
    std::string cs = ck.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    if (neg) cs = cs.substr(1);
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

polynomial poly_gcd(polynomial a, polynomial b) {
  while (!b.is_zero()) {
    polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

polynomial poly_lcm(const polynomial& a, const polynomial& b) {
  if (a.is_zero() || b.is_zero()) return polynomial(a.base());
  polynomial g = poly_gcd(a, b);
  return (a * b).divmod(g).first.monic();
}

polynomial minimal_polynomial(const matrix& a) {
  if (!a.ring().is_field()) {
    fail(errc::unsupported_ring,
         "minimal polynomial is computed over field coefficient rings, got " +
             a.ring().str());
  }
  const std::size_t n = a.size();
  field_desc f = a.ring().base();
  polynomial m = polynomial::constant(f, field_scalar::one(f));
  for (std::size_t i = 0; i < n && m.degree() < static_cast<int>(n); ++i) {
    span_builder sp(a.ring(), n);
    std::vector<ring_value> w(n, ring_value::zero(a.ring()));
    w[i] = ring_value::one(a.ring());
    while (sp.insert(w)) w = matrix_times_col(a, w);
    const auto& combo = sp.last_combo();
    std::vector<field_scalar> coeffs(combo.size() + 1, field_scalar::zero(f));
    for (std::size_t k = 0; k < combo.size(); ++k) coeffs[k] = -combo[k].field();
    coeffs[combo.size()] = field_scalar::one(f);
    m = poly_lcm(m, polynomial::from_coeffs(f, std::move(coeffs)));
  }
  return m;
}

std::size_t local_degree(const matrix& a, const std::vector<ring_value>& v) {
  bool zero = true;
  for (const auto& c : v) zero = zero && c.is_zero();
  if (zero) return 0;
  span_builder sp(a.ring(), a.size());
  std::vector<ring_value> w = v;
  std::size_t d = 0;
  while (sp.insert(w)) {
    w = matrix_times_col(a, w);
    ++d;
  }
  return d;
}

}  // namespace commfact
