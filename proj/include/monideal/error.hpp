#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monideal {

enum class Errc {
  ring_mismatch,
  invalid_argument,
  zero_ideal,
  unit_ideal,
  overflow,
  duplicate_radical,
  embedded_primes,
  not_minimal,
  cap_exceeded,
  not_a_graph,
  not_colorable,
  not_slw,
  hypothesis_not_met,
  construction_mismatch,
  oracle_disagreement,
  syntax_error,
  out_of_range,
  rejection_cap,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ring_mismatch: return "ring_mismatch";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::zero_ideal: return "zero_ideal";
    case Errc::unit_ideal: return "unit_ideal";
    case Errc::overflow: return "overflow";
    case Errc::duplicate_radical: return "duplicate_radical";
    case Errc::embedded_primes: return "embedded_primes";
    case Errc::not_minimal: return "not_minimal";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::not_a_graph: return "not_a_graph";
    case Errc::not_colorable: return "not_colorable";
    case Errc::not_slw: return "not_slw";
    case Errc::hypothesis_not_met: return "hypothesis_not_met";
    case Errc::construction_mismatch: return "construction_mismatch";
    case Errc::oracle_disagreement: return "oracle_disagreement";
    case Errc::syntax_error: return "syntax_error";
    case Errc::out_of_range: return "out_of_range";
    case Errc::rejection_cap: return "rejection_cap";
  }
  return "unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace monideal
