#pragma once

#include <stdexcept>
#include <string>

namespace commfact {

enum class errc {
  not_invertible,
  not_prime,
  ring_mismatch,
  field_too_small,
  no_zero_sum,
  commutative_ring,
  shape,
  singular,
  not_singular,
  unsupported_ring,
  not_zero_diag,
  not_triangular,
  trace_nonzero,
  size,
  central,
  precondition,
  degree_too_low,
  scale,
  bad_witness,
  parse,
};

constexpr const char* errc_name(errc c) {
  switch (c) {
    case errc::not_invertible: return "E_NOT_INVERTIBLE";
    case errc::not_prime: return "E_NOT_PRIME";
    case errc::ring_mismatch: return "E_RING_MISMATCH";
    case errc::field_too_small: return "E_FIELD_TOO_SMALL";
    case errc::no_zero_sum: return "E_NO_ZERO_SUM";
    case errc::commutative_ring: return "E_COMMUTATIVE_RING";
    case errc::shape: return "E_SHAPE";
    case errc::singular: return "E_SINGULAR";
    case errc::not_singular: return "E_NOT_SINGULAR";
    case errc::unsupported_ring: return "E_UNSUPPORTED_RING";
    case errc::not_zero_diag: return "E_NOT_ZERO_DIAG";
    case errc::not_triangular: return "E_NOT_TRIANGULAR";
    case errc::trace_nonzero: return "E_TRACE_NONZERO";
    case errc::size: return "E_SIZE";
    case errc::central: return "E_CENTRAL";
    case errc::precondition: return "E_PRECONDITION";
    case errc::degree_too_low: return "E_DEGREE_TOO_LOW";
    case errc::scale: return "E_SCALE";
    case errc::bad_witness: return "E_BAD_WITNESS";
    case errc::parse: return "E_PARSE";
  }
  return "E_UNKNOWN";
}

// Typed failure carrying a stable code plus a human-readable message that
// names the violated hypothesis.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace commfact
