#pragma once

#include <string>
#include <vector>

namespace coxperc {

// A finite Coxeter presentation: generators s_1..s_n with relations
// (s_i s_j)^{m_ij} = 1. The matrix is symmetric, m_ii = 1, m_ij >= 2 off the
// diagonal; infinite bonds are rejected.
struct CoxeterSystem {
  std::string name;
  std::vector<std::string> generators;
  std::vector<std::vector<int>> matrix;

  int rank() const { return static_cast<int>(generators.size()); }
  int bond(int i, int j) const { return matrix[i][j]; }
};

CoxeterSystem validate_system(std::string name, std::vector<std::string> labels,
                              std::vector<std::vector<int>> matrix);

// Named systems: "An" (n>=1), "Bn" (n>=2), "Dn" (n>=3, fork at s_{n-2}),
// "F4", "H3", "I2(m)" (m>=2), and 'x'-joined direct products such as
// "A2xI2(2)". Diagram numbering follows the README conventions.
CoxeterSystem built_in_system(const std::string& name);

// Block-diagonal join with m = 2 across blocks. Generators are relabelled
// s1..sN; a rank-0 factor acts as the identity.
CoxeterSystem direct_product(const CoxeterSystem& a, const CoxeterSystem& b);

// {"name": "...", "generators": [...], "matrix": [[...]]}
CoxeterSystem system_from_json_text(const std::string& text);
CoxeterSystem system_from_json_file(const std::string& path);

// Comma-separated generator labels -> sorted generator indices. Empty input
// (or "-") is the empty subset.
std::vector<int> parse_subset(const CoxeterSystem& sys, const std::string& csv);
std::string subset_to_string(const CoxeterSystem& sys, const std::vector<int>& subset);

}  // namespace coxperc
