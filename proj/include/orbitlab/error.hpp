#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

/// Failure categories surfaced by the library; the CLI maps these to exit codes.
enum class Errc {
  zero_inverse,
  context_mismatch,
  shape_mismatch,
  length_mismatch,
  not_nilpotent,
  characteristic_too_small,
  budget_exceeded,
  not_closed_under_bracket,
  invalid_root_for_family,
  family_mismatch,
  not_a_subalgebra,
  semidirect_violation,
  non_abelian_ideal,
  insufficient_points,
  rank_drift,
  orbit_spec_mismatch,
  bad_field_spec,
  reducible_modulus,
  unsupported_field,
  invariant_violation,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void check(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace orbitlab
