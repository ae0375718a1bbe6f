#pragma once

#include "coxperc/incidence.hpp"
#include "coxperc/rational.hpp"

#include <string>

namespace coxperc {

enum class ConjectureVerdict { confirms_instance, equals_krr, no_improvement };

const char* verdict_name(ConjectureVerdict v);

// Exact exponent data for a bipartite incidence graph: c = (v - t - 1)/(e - t)
// with t the larger part, the comparison against the degree-based exponent
// 2 - 1/r, and the complete-bipartite special case.
struct ExtremalReport {
  long long v = 0, e = 0;
  long long part_a = 0, part_b = 0;
  long long t_max = 0;
  long long deg_a = 0, deg_b = 0;
  Rational c, exponent;
  long long furedi_r = 0;
  Rational furedi_exponent;
  bool beats_furedi = false;
  bool is_complete_bipartite = false;
  ConjectureVerdict verdict = ConjectureVerdict::no_improvement;
  std::string note;  // set when the computed exponent is known to diverge from
                     // a previously published figure
};

ExtremalReport extremal_exponent(const IncidenceGraph& graph);

struct BalancedExponent {
  Rational c;
  Rational gap;  // c - 1/r, cross-checked against (v - 2r) / (v (r-1) r)
};

BalancedExponent balanced_exponent(long long v, long long r);

// Inclusion graph between a-subsets and b-subsets of an m-set: exact part and
// edge counts (both closed forms asserted equal), the exponent, and the
// degree-comparison inequality in the case split it calls for (with the
// complementation reduction applied when needed).
struct InclusionStats {
  BigInt part_a, part_b, edges;
  Rational c;
  BigInt furedi_r;
  int comparison_case = 0;  // 1: both sides at most m/2; 2: straddling m/2
  bool complemented = false;
  unsigned used_a = 0, used_b = 0;
  Rational lhs, rhs;
  bool improves = false;
};

InclusionStats inclusion_graph_stats(unsigned m, unsigned a, unsigned b);

struct InclusionValidation {
  bool isomorphic = false;
  long long part_a = 0, part_b = 0, edges = 0;
};

// Builds the symmetric-group incidence graph for (m, a, b), maps minimal
// representatives to subsets through one-line notation, and checks the edge
// set is exactly subset inclusion.
InclusionValidation cross_validate_inclusion(unsigned m, unsigned a, unsigned b,
                                             long cap = kDefaultCosetCap);

std::string to_json_text(const ExtremalReport& report);
std::string to_text(const ExtremalReport& report);

}  // namespace coxperc
