#include "commfact/ring.hpp"

#include <cctype>

namespace commfact {

std::string ring_desc::str() const {
  switch (kind_) {
    case ring_kind::rational:
      return "rational";
    case ring_kind::prime_field:
      return "gf(" + std::to_string(base_.p) + ")";
    case ring_kind::quaternion:
      return "quaternion";
    case ring_kind::counterexample:
      return "counterexample(" +
             (base_.is_rational() ? std::string("rational")
                                  : "gf(" + std::to_string(base_.p) + ")") +
             ")";
  }
  return "?";
}

ring_value ring_value::from_int(const ring_desc& r, long k) {
  switch (r.kind()) {
    case ring_kind::rational:
    case ring_kind::prime_field:
      return ring_value(field_scalar::from_int(r.base(), k));
    case ring_kind::quaternion:
      return quaternion_value(mpq_class(k), 0, 0, 0);
    case ring_kind::counterexample: {
      field_desc b = r.base();
      return counterexample_value({field_scalar::from_int(b, k),
                                   field_scalar::zero(b), field_scalar::zero(b),
                                   field_scalar::zero(b), field_scalar::zero(b)});
    }
  }
  fail(errc::unsupported_ring, "unknown ring kind");
}

ring_value ring_value::quaternion_value(mpq_class w, mpq_class x, mpq_class y,
                                        mpq_class z) {
  w.canonicalize();
  x.canonicalize();
  y.canonicalize();
  z.canonicalize();
  return ring_value(quat_v{{std::move(w), std::move(x), std::move(y), std::move(z)}});
}

ring_value ring_value::counterexample_value(std::array<field_scalar, 5> t) {
  field_desc b = t[0].desc();
  for (const auto& s : t) {
    if (!(s.desc() == b)) {
      fail(errc::ring_mismatch, "counterexample components from different base fields");
    }
  }
  return ring_value(cx_v{std::move(t)});
}

ring_desc ring_value::ring() const {
  if (const auto* s = std::get_if<field_scalar>(&v_)) {
    return s->desc().is_rational() ? ring_desc::rational()
                                   : ring_desc::prime_field(s->desc().p);
  }
  if (std::holds_alternative<quat_v>(v_)) return ring_desc::quaternion();
  return ring_desc::counterexample(std::get<cx_v>(v_).t[0].desc());
}

bool ring_value::is_zero() const {
  if (const auto* s = std::get_if<field_scalar>(&v_)) return s->is_zero();
  if (const auto* q = std::get_if<quat_v>(&v_)) {
    for (const auto& c : q->c) {
      if (sgn(c) != 0) return false;
    }
    return true;
  }
  for (const auto& s : std::get<cx_v>(v_).t) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool ring_value::is_one() const { return *this == one(ring()); }

bool ring_value::is_central() const {
  if (const auto* q = std::get_if<quat_v>(&v_)) {
    return sgn(q->c[1]) == 0 && sgn(q->c[2]) == 0 && sgn(q->c[3]) == 0;
  }
  return true;
}

bool ring_value::is_invertible() const {
  if (const auto* c = std::get_if<cx_v>(&v_)) return !c->t[0].is_zero();
  return !is_zero();
}

bool ring_value::operator==(const ring_value& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (const auto* s = std::get_if<field_scalar>(&v_)) {
    return *s == std::get<field_scalar>(o.v_);
  }
  if (const auto* q = std::get_if<quat_v>(&v_)) {
    const auto& p = std::get<quat_v>(o.v_).c;
    for (int i = 0; i < 4; ++i) {
      if (q->c[i] != p[i]) return false;
    }
    return true;
  }
  return std::get<cx_v>(v_).t == std::get<cx_v>(o.v_).t;
}

void ring_value::check_same(const ring_value& a, const ring_value& b) {
  if (a.ring() == b.ring()) return;
  fail(errc::ring_mismatch,
       "values from different rings: " + a.ring().str() + " vs " + b.ring().str());
}

ring_value ring_value::operator+(const ring_value& o) const {
  check_same(*this, o);
  if (const auto* s = std::get_if<field_scalar>(&v_)) {
    return ring_value(*s + std::get<field_scalar>(o.v_));
  }
  if (const auto* q = std::get_if<quat_v>(&v_)) {
    const auto& p = std::get<quat_v>(o.v_).c;
    quat_v r;
    for (int i = 0; i < 4; ++i) r.c[i] = q->c[i] + p[i];
    return ring_value(std::move(r));
  }
  const auto& a = std::get<cx_v>(v_).t;
  const auto& b = std::get<cx_v>(o.v_).t;
  cx_v r;
  for (int i = 0; i < 5; ++i) r.t[i] = a[i] + b[i];
  return ring_value(std::move(r));
}

ring_value ring_value::operator-(const ring_value& o) const {
  check_same(*this, o);
  if (const auto* s = std::get_if<field_scalar>(&v_)) {
    return ring_value(*s - std::get<field_scalar>(o.v_));
  }
  if (const auto* q = std::get_if<quat_v>(&v_)) {
    const auto& p = std::get<quat_v>(o.v_).c;
    quat_v r;
    for (int i = 0; i < 4; ++i) r.c[i] = q->c[i] - p[i];
    return ring_value(std::move(r));
  }
  const auto& a = std::get<cx_v>(v_).t;
  const auto& b = std::get<cx_v>(o.v_).t;
  cx_v r;
  for (int i = 0; i < 5; ++i) r.t[i] = a[i] - b[i];
  return ring_value(std::move(r));
}

ring_value ring_value::operator*(const ring_value& o) const {
  check_same(*this, o);
  if (const auto* s = std::get_if<field_scalar>(&v_)) {
    return ring_value(*s * std::get<field_scalar>(o.v_));
  }
  if (const auto* q = std::get_if<quat_v>(&v_)) {
    const auto& a = q->c;
    const auto& b = std::get<quat_v>(o.v_).c;
    quat_v r;
    r.c[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
    r.c[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
    r.c[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
    r.c[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
    return ring_value(std::move(r));
  }
  // (s0 + v)(t0 + w) = s0·t0 + s0·w + t0·v; products of pure parts vanish.
  const auto& a = std::get<cx_v>(v_).t;
  const auto& b = std::get<cx_v>(o.v_).t;
  cx_v r;
  r.t[0] = a[0] * b[0];
  for (int i = 1; i < 5; ++i) r.t[i] = a[0] * b[i] + b[0] * a[i];
  return ring_value(std::move(r));
}

ring_value ring_value::operator-() const {
  if (const auto* s = std::get_if<field_scalar>(&v_)) return ring_value(-*s);
  if (const auto* q = std::get_if<quat_v>(&v_)) {
    quat_v r;
    for (int i = 0; i < 4; ++i) r.c[i] = -q->c[i];
    return ring_value(std::move(r));
  }
  cx_v r;
  const auto& a = std::get<cx_v>(v_).t;
  for (int i = 0; i < 5; ++i) r.t[i] = -a[i];
  return ring_value(std::move(r));
}

ring_value ring_value::inv() const {
  if (!is_invertible()) {
    fail(errc::not_invertible, "element " + str() + " of " + ring().str() +
                                   " has no inverse");
  }
  if (const auto* s = std::get_if<field_scalar>(&v_)) return ring_value(s->inv());
  if (const auto* q = std::get_if<quat_v>(&v_)) {
    const auto& a = q->c;
    mpq_class norm = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
    quat_v r;
    r.c[0] = a[0] / norm;
    for (int i = 1; i < 4; ++i) r.c[i] = -a[i] / norm;
    return ring_value(std::move(r));
  }
  // (t0 + v)^{-1} = t0^{-1} - t0^{-2}·v, valid exactly when t0 ≠ 0.
  const auto& a = std::get<cx_v>(v_).t;
  field_scalar u = a[0].inv();
  field_scalar u2 = u * u;
  cx_v r;
  r.t[0] = u;
  for (int i = 1; i < 5; ++i) r.t[i] = -(u2 * a[i]);
  return ring_value(std::move(r));
}

const field_scalar& ring_value::field() const {
  if (const auto* s = std::get_if<field_scalar>(&v_)) return *s;
  fail(errc::ring_mismatch, "value is not a base-field scalar");
}

const mpq_class& ring_value::quat(int i) const {
  if (const auto* q = std::get_if<quat_v>(&v_)) return q->c[i];
  fail(errc::ring_mismatch, "value is not a quaternion");
}

const field_scalar& ring_value::cx(int i) const {
  if (const auto* c = std::get_if<cx_v>(&v_)) return c->t[i];
  fail(errc::ring_mismatch, "value is not a counterexample-ring element");
}

namespace {

std::string bracketed(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + "]";
}

std::vector<std::string> split_bracketed(const std::string& text, std::size_t arity) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    fail(errc::parse, "expected bracketed tuple, got '" + text + "'");
  }
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += s[i];
    }
  }
  parts.push_back(cur);
  if (parts.size() != arity) {
    fail(errc::parse, "expected " + std::to_string(arity) + " components in '" +
                          text + "'");
  }
  return parts;
}

}  // namespace

std::string ring_value::str() const {
  if (const auto* s = std::get_if<field_scalar>(&v_)) return s->str();
  if (const auto* q = std::get_if<quat_v>(&v_)) {
    std::vector<std::string> parts;
    for (const auto& c : q->c) parts.push_back(c.get_str());
    return bracketed(parts);
  }
  std::vector<std::string> parts;
  for (const auto& s : std::get<cx_v>(v_).t) parts.push_back(s.str());
  return bracketed(parts);
}

ring_value ring_value::parse(const ring_desc& r, const std::string& text) {
  switch (r.kind()) {
    case ring_kind::rational:
    case ring_kind::prime_field:
      return from_field(field_scalar::parse(r.base(), text));
    case ring_kind::quaternion: {
      auto parts = split_bracketed(text, 4);
      field_desc q{0};
      return quaternion_value(field_scalar::parse(q, parts[0]).rat(),
                              field_scalar::parse(q, parts[1]).rat(),
                              field_scalar::parse(q, parts[2]).rat(),
                              field_scalar::parse(q, parts[3]).rat());
    }
    case ring_kind::counterexample: {
      auto parts = split_bracketed(text, 5);
      std::array<field_scalar, 5> t;
      for (int i = 0; i < 5; ++i) t[i] = field_scalar::parse(r.base(), parts[i]);
      return counterexample_value(std::move(t));
    }
  }
  fail(errc::unsupported_ring, "unknown ring kind");
}

std::vector<ring_value> distinct_central(const ring_desc& r, std::size_t n) {
  std::vector<ring_value> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto c = central_sequence_at(r, k);
    if (!c) {
      fail(errc::field_too_small,
           "the base field of " + r.str() + " has fewer than " +
               std::to_string(n) +
               " elements, so no such central family exists");
    }
    out.push_back(std::move(*c));
  }
  return out;
}

std::vector<ring_value> invertible_zero_sum(const ring_desc& r, std::size_t n) {
  if (n < 2) fail(errc::size, "need at least two summands");
  std::uint64_t ch = r.characteristic();
  std::vector<ring_value> out;
  out.reserve(n);
  if (ch == 2) {
    if (n % 2 != 0) {
      fail(errc::no_zero_sum,
           "over characteristic 2 the only invertible value is 1, and an odd "
           "number of ones cannot sum to zero");
    }
    for (std::size_t k = 0; k < n; ++k) out.push_back(ring_value::one(r));
    return out;
  }
  if (ch == 0 || (n - 1) % ch != 0) {
    for (std::size_t k = 0; k + 1 < n; ++k) out.push_back(ring_value::one(r));
    out.push_back(ring_value::from_int(r, -static_cast<long>(n - 1)));
    return out;
  }
  // char divides n-1 (odd char), so -(n-1) = 0; use 1,...,1,2,-n instead.
  for (std::size_t k = 0; k + 2 < n; ++k) out.push_back(ring_value::one(r));
  out.push_back(ring_value::from_int(r, 2));
  out.push_back(ring_value::from_int(r, -static_cast<long>(n)));
  return out;
}

std::pair<ring_value, ring_value> nonzero_commutator_pair(const ring_desc& r) {
  if (r.commutative()) {
    fail(errc::commutative_ring,
         "every commutator vanishes in the commutative ring " + r.str());
  }
  return {ring_value::quaternion_value(0, 1, 0, 0),
          ring_value::quaternion_value(0, 0, 1, 0)};
}

std::optional<ring_value> central_sequence_at(const ring_desc& r, std::size_t k) {
  auto s = field_sequence_at(r.base(), k);
  if (!s) return std::nullopt;
  if (r.is_field()) return ring_value::from_field(*s);
  if (r.kind() == ring_kind::quaternion) {
    return ring_value::quaternion_value(s->rat(), 0, 0, 0);
  }
  field_desc b = r.base();
  return ring_value::counterexample_value({*s, field_scalar::zero(b),
                                           field_scalar::zero(b),
                                           field_scalar::zero(b),
                                           field_scalar::zero(b)});
}

std::optional<ring_value> central_positive_at(const ring_desc& r, std::size_t k) {
  auto s = field_positive_at(r.base(), k);
  if (!s) return std::nullopt;
  if (r.is_field()) return ring_value::from_field(*s);
  if (r.kind() == ring_kind::quaternion) {
    return ring_value::quaternion_value(s->rat(), 0, 0, 0);
  }
  field_desc b = r.base();
  return ring_value::counterexample_value({*s, field_scalar::zero(b),
                                           field_scalar::zero(b),
                                           field_scalar::zero(b),
                                           field_scalar::zero(b)});
}

}  // namespace commfact
