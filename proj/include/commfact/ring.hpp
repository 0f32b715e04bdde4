#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "commfact/scalars.hpp"

namespace commfact {

enum class ring_kind { rational, prime_field, quaternion, counterexample };

// Coefficient-ring selector. `base` is the underlying commutative field: the
// ring itself for ℚ and GF(p), ℚ for rational quaternions, and the
// configured base field for the counterexample ring F·1 ⊕ C₀.
class ring_desc {
 public:
  static ring_desc rational() { return {ring_kind::rational, field_desc{0}}; }
  static ring_desc prime_field(std::uint64_t p) {
    return {ring_kind::prime_field, make_prime_field(p)};
  }
  static ring_desc quaternion() { return {ring_kind::quaternion, field_desc{0}}; }
  static ring_desc counterexample(field_desc base) {
    return {ring_kind::counterexample, base};
  }

  ring_kind kind() const { return kind_; }
  field_desc base() const { return base_; }
  bool commutative() const { return kind_ != ring_kind::quaternion; }
  bool is_division_ring() const { return kind_ != ring_kind::counterexample; }
  bool is_field() const {
    return kind_ == ring_kind::rational || kind_ == ring_kind::prime_field;
  }
  std::uint64_t characteristic() const { return base_.p; }
  bool operator==(const ring_desc&) const = default;
  std::string str() const;

 private:
  ring_desc(ring_kind k, field_desc b) : kind_(k), base_(b) {}
  ring_kind kind_;
  field_desc base_;
};

// One exact element of a configured ring. Canonical forms: reduced rationals,
// least residues, componentwise-canonical quaternions and 5-tuples.
class ring_value {
 public:
  ring_value() : v_(field_scalar()) {}

  static ring_value zero(const ring_desc& r) { return from_int(r, 0); }
  static ring_value one(const ring_desc& r) { return from_int(r, 1); }
  static ring_value from_int(const ring_desc& r, long k);
  static ring_value from_field(field_scalar s) { return ring_value(std::move(s)); }
  static ring_value quaternion_value(mpq_class w, mpq_class x, mpq_class y,
                                     mpq_class z);
  static ring_value counterexample_value(std::array<field_scalar, 5> t);

  ring_desc ring() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_central() const;
  bool is_invertible() const;
  bool operator==(const ring_value& o) const;
  bool operator!=(const ring_value& o) const { return !(*this == o); }

  ring_value operator+(const ring_value& o) const;
  ring_value operator-(const ring_value& o) const;
  ring_value operator*(const ring_value& o) const;
  ring_value operator-() const;
  ring_value inv() const;

  const field_scalar& field() const;
  const mpq_class& quat(int i) const;
  const field_scalar& cx(int i) const;

  std::string str() const;
  static ring_value parse(const ring_desc& r, const std::string& text);

 private:
  struct quat_v {
    std::array<mpq_class, 4> c;
  };
  struct cx_v {
    std::array<field_scalar, 5> t;
  };
  explicit ring_value(field_scalar s) : v_(std::move(s)) {}
  explicit ring_value(quat_v q) : v_(std::move(q)) {}
  explicit ring_value(cx_v c) : v_(std::move(c)) {}

  static void check_same(const ring_value& a, const ring_value& b);

  std::variant<field_scalar, quat_v, cx_v> v_;
};

// n central elements whose pairwise differences are invertible.
std::vector<ring_value> distinct_central(const ring_desc& r, std::size_t n);

// n invertible elements summing to zero, deterministic recipe.
std::vector<ring_value> invertible_zero_sum(const ring_desc& r, std::size_t n);

// A pair (p, q) with [p, q] = pq - qp invertible; noncommutative rings only.
std::pair<ring_value, ring_value> nonzero_commutator_pair(const ring_desc& r);

// Enumeration of the ring's center: 0, 1, -1, 2, -2, ... embedded centrally
// (0..p-1 when the center is finite; nullopt past the end).
std::optional<ring_value> central_sequence_at(const ring_desc& r, std::size_t k);

// Positive central enumeration 1, 2, 3, ... used by smallest-avoiding
// searches.
std::optional<ring_value> central_positive_at(const ring_desc& r, std::size_t k);

}  // namespace commfact
