#include "commfact/scalars.hpp"

#include <cctype>

namespace commfact {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

field_desc make_rational_field() { return field_desc{0}; }

field_desc make_prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) {
    fail(errc::scale, "prime modulus must be below 2^32, got " + std::to_string(p));
  }
  if (!is_prime_u64(p)) {
    fail(errc::not_prime, "modulus " + std::to_string(p) + " is not prime");
  }
  return field_desc{p};
}

field_scalar field_scalar::zero(field_desc d) { return from_int(d, 0); }

field_scalar field_scalar::one(field_desc d) { return from_int(d, 1); }

field_scalar field_scalar::from_int(field_desc d, long k) {
  if (d.is_rational()) return field_scalar(mpq_class(k));
  std::int64_t r = k % static_cast<std::int64_t>(d.p);
  if (r < 0) r += static_cast<std::int64_t>(d.p);
  return field_scalar(fp{static_cast<std::uint64_t>(r), d.p});
}

field_scalar field_scalar::rational(mpq_class q) {
  q.canonicalize();
  return field_scalar(std::move(q));
}

field_scalar field_scalar::mod_p(std::uint64_t p, std::uint64_t v) {
  field_desc d = make_prime_field(p);
  return field_scalar(fp{v % d.p, d.p});
}

field_desc field_scalar::desc() const {
  if (std::holds_alternative<mpq_class>(v_)) return field_desc{0};
  return field_desc{std::get<fp>(v_).p};
}

bool field_scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<fp>(v_).v == 0;
}

bool field_scalar::operator==(const field_scalar& o) const { return v_ == o.v_; }

void field_scalar::check_same(const field_scalar& a, const field_scalar& b) {
  if (a.desc() == b.desc()) return;
  fail(errc::ring_mismatch, "scalars from different base fields");
}

field_scalar field_scalar::operator+(const field_scalar& o) const {
  check_same(*this, o);
  if (const auto* q = std::get_if<mpq_class>(&v_)) {
    return field_scalar(mpq_class(*q + std::get<mpq_class>(o.v_)));
  }
  const fp& a = std::get<fp>(v_);
  const fp& b = std::get<fp>(o.v_);
  return field_scalar(fp{(a.v + b.v) % a.p, a.p});
}

field_scalar field_scalar::operator-(const field_scalar& o) const {
  check_same(*this, o);
  if (const auto* q = std::get_if<mpq_class>(&v_)) {
    return field_scalar(mpq_class(*q - std::get<mpq_class>(o.v_)));
  }
  const fp& a = std::get<fp>(v_);
  const fp& b = std::get<fp>(o.v_);
  return field_scalar(fp{(a.v + a.p - b.v) % a.p, a.p});
}

field_scalar field_scalar::operator*(const field_scalar& o) const {
  check_same(*this, o);
  if (const auto* q = std::get_if<mpq_class>(&v_)) {
    return field_scalar(mpq_class(*q * std::get<mpq_class>(o.v_)));
  }
  const fp& a = std::get<fp>(v_);
  const fp& b = std::get<fp>(o.v_);
  return field_scalar(fp{(a.v * b.v) % a.p, a.p});
}

field_scalar field_scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return field_scalar(mpq_class(-*q));
  const fp& a = std::get<fp>(v_);
  return field_scalar(fp{a.v == 0 ? 0 : a.p - a.v, a.p});
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

field_scalar field_scalar::inv() const {
  if (is_zero()) fail(errc::not_invertible, "zero has no inverse");
  if (const auto* q = std::get_if<mpq_class>(&v_)) {
    return field_scalar(mpq_class(1 / *q));
  }
  const fp& a = std::get<fp>(v_);
  return field_scalar(fp{pow_mod(a.v, a.p - 2, a.p), a.p});
}

const mpq_class& field_scalar::rat() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  fail(errc::ring_mismatch, "scalar is not rational");
}

std::uint64_t field_scalar::residue() const {
  if (const auto* f = std::get_if<fp>(&v_)) return f->v;
  fail(errc::ring_mismatch, "scalar is not a prime-field residue");
}

std::string field_scalar::str() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<fp>(v_).v);
}

field_scalar field_scalar::parse(field_desc d, const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) fail(errc::parse, "empty scalar");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
    } else if (s[i] == '/' && !seen_slash && seen_digit && i + 1 < s.size()) {
      seen_slash = true;
      seen_digit = false;
    } else {
      fail(errc::parse, "bad scalar literal '" + text + "'");
    }
  }
  if (!seen_digit) fail(errc::parse, "bad scalar literal '" + text + "'");

  if (d.is_rational()) {
    mpq_class q(s, 10);
    if (sgn(q.get_den()) == 0) fail(errc::parse, "zero denominator in '" + text + "'");
    q.canonicalize();
    return field_scalar(std::move(q));
  }
  if (seen_slash) fail(errc::parse, "prime-field scalar cannot carry '/'");
  mpz_class z(s, 10);
  mpz_class r = z % static_cast<unsigned long>(d.p);
  if (sgn(r) < 0) r += static_cast<unsigned long>(d.p);
  return field_scalar(fp{r.get_ui(), d.p});
}

std::optional<field_scalar> field_sequence_at(field_desc d, std::size_t k) {
  if (d.is_rational()) {
    if (k == 0) return field_scalar::zero(d);
    long m = static_cast<long>((k + 1) / 2);
    return field_scalar::from_int(d, k % 2 == 1 ? m : -m);
  }
  if (k >= d.p) return std::nullopt;
  return field_scalar::from_int(d, static_cast<long>(k));
}

std::optional<field_scalar> field_positive_at(field_desc d, std::size_t k) {
  if (k == 0) return std::nullopt;
  if (!d.is_rational() && k >= d.p) return std::nullopt;
  return field_scalar::from_int(d, static_cast<long>(k));
}

}  // namespace commfact
