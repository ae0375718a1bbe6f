#pragma once

#include <stdexcept>
#include <string>

namespace coxperc {

enum class Errc {
  asymmetric_matrix,
  bad_diagonal,
  entry_below_2,
  duplicate_label,
  cap_exceeded,
  bad_index,
  bad_subset,
  bad_start,
  bad_input,
  bad_range,
  budget_exceeded,
  guard,
  automorphism_cap,
  degenerate,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::asymmetric_matrix: return "ASYMMETRIC_MATRIX";
    case Errc::bad_diagonal: return "BAD_DIAGONAL";
    case Errc::entry_below_2: return "ENTRY_BELOW_2";
    case Errc::duplicate_label: return "DUPLICATE_LABEL";
    case Errc::cap_exceeded: return "CAP_EXCEEDED";
    case Errc::bad_index: return "BAD_INDEX";
    case Errc::bad_subset: return "BAD_SUBSET";
    case Errc::bad_start: return "BAD_START";
    case Errc::bad_input: return "BAD_INPUT";
    case Errc::bad_range: return "BAD_RANGE";
    case Errc::budget_exceeded: return "BUDGET_EXCEEDED";
    case Errc::guard: return "GUARD";
    case Errc::automorphism_cap: return "AUTOMORPHISM_CAP";
    case Errc::degenerate: return "DEGENERATE";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace coxperc
