#pragma once

#include "coxperc/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coxperc {

struct AuditLaw {
  std::string name;
  bool exhaustive = false;
  long long checked = 0;
  long long failures = 0;
  std::string first_failure;
};

struct AuditReport {
  std::string system_name;
  long long budget = 0;
  std::uint64_t seed = 0;
  std::vector<AuditLaw> laws;

  bool all_pass() const {
    for (const auto& l : laws)
      if (l.failures) return false;
    return true;
  }
};

// Machine-checks the structural laws the rest of the library leans on:
// parity, strong exchange, deletion, lifting, order-preserving projection,
// quotient chain property, subword-vs-Bruhat agreement and factorization
// additivity. Each law runs exhaustively when its instance space fits the
// budget and falls back to seeded sampling otherwise. Failures indicate
// implementation bugs, never input errors.
AuditReport axiom_audit(const Group& g, long long budget = 10000, std::uint64_t seed = 0);

std::string to_text(const AuditReport& report);
std::string to_json_text(const AuditReport& report);

}  // namespace coxperc
