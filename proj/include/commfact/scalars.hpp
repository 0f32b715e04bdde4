#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "commfact/errors.hpp"

namespace commfact {

bool is_prime_u64(std::uint64_t n);

// Base-field selector: p == 0 means the rationals, otherwise GF(p) with p a
// prime below 2^32 (so residue products fit in 64 bits).
struct field_desc {
  std::uint64_t p = 0;
  bool operator==(const field_desc&) const = default;
  bool is_rational() const { return p == 0; }
  std::uint64_t characteristic() const { return p; }
};

field_desc make_rational_field();
field_desc make_prime_field(std::uint64_t p);

// A scalar in ℚ (arbitrary precision, canonical lowest terms with positive
// denominator) or GF(p) (least nonnegative residue).
class field_scalar {
 public:
  field_scalar() : v_(mpq_class(0)) {}

  static field_scalar zero(field_desc d);
  static field_scalar one(field_desc d);
  static field_scalar from_int(field_desc d, long k);
  static field_scalar rational(mpq_class q);
  static field_scalar mod_p(std::uint64_t p, std::uint64_t v);
  static field_scalar parse(field_desc d, const std::string& text);

  field_desc desc() const;
  bool is_zero() const;
  bool is_one() const { return *this == one(desc()); }
  bool operator==(const field_scalar& o) const;

  field_scalar operator+(const field_scalar& o) const;
  field_scalar operator-(const field_scalar& o) const;
  field_scalar operator*(const field_scalar& o) const;
  field_scalar operator-() const;
  field_scalar inv() const;
  field_scalar div(const field_scalar& o) const { return *this * o.inv(); }

  const mpq_class& rat() const;
  std::uint64_t residue() const;

  std::string str() const;

 private:
  struct fp {
    std::uint64_t v, p;
    bool operator==(const fp&) const = default;
  };
  explicit field_scalar(mpq_class q) : v_(std::move(q)) {}
  explicit field_scalar(fp f) : v_(f) {}

  std::variant<mpq_class, fp> v_;

  static void check_same(const field_scalar& a, const field_scalar& b);
};

// Canonical field enumeration: 0, 1, -1, 2, -2, ... over ℚ; 0, 1, ..., p-1
// over GF(p). Returns nothing once GF(p) is exhausted.
std::optional<field_scalar> field_sequence_at(field_desc d, std::size_t k);

// Positive enumeration 1, 2, 3, ... (1, ..., p-1 over GF(p)) used by the
// smallest-avoiding-scalar searches.
std::optional<field_scalar> field_positive_at(field_desc d, std::size_t k);

}  // namespace commfact
