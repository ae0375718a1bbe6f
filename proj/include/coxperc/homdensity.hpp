#pragma once

#include "coxperc/percolation.hpp"
#include "coxperc/rational.hpp"

namespace coxperc {

inline constexpr long long kDefaultHomBudget = 100'000'000;

// Small simple host graph, optionally edge-weighted with nonnegative
// rationals. A missing edge is weight 0; unweighted graphs use weight 1.
struct HostGraph {
  int n = 0;
  std::vector<Rational> weight;  // n*n, symmetric, zero diagonal

  static HostGraph simple(int n, const std::vector<std::pair<int, int>>& edges);
  Rational& w(int i, int j) { return weight[static_cast<size_t>(i) * n + j]; }
  const Rational& w(int i, int j) const { return weight[static_cast<size_t>(i) * n + j]; }
  void set_edge(int i, int j, const Rational& value);
  bool unweighted01() const;
};

struct PatternGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// |Hom(pattern, host)| / n^{|pattern|}, by exhaustive enumeration over all
// vertex maps (edge-weight products for weighted hosts). Guarded by
// n^{|pattern|} <= budget.
Rational hom_density(const PatternGraph& pattern, const HostGraph& host,
                     long long budget = kDefaultHomBudget);

PatternGraph pattern_from_graph(const IncidenceGraph& graph);
PatternGraph induced_pattern(const IncidenceGraph& graph, const std::vector<bool>& keep_vertex);
PatternGraph spanning_pattern(const IncidenceGraph& graph, const CosetSet& keep_edge);

struct InequalityCheck {
  bool holds = false;
  Rational lhs, rhs;
};

// t(H,G) * t(H[F],G) >= t(H[L+F],G)^2 for the tripartition of a reflection.
InequalityCheck check_cut_involution_inequality(const IncidenceGraph& graph, const Reflection& t,
                                                const HostGraph& host,
                                                long long budget = kDefaultHomBudget);

// t(J,G)^2 <= t(J+,G) * t(J-,G) for an edge subset folded both ways on the
// edge table (squared form keeps everything rational).
InequalityCheck check_fold_inequality(const IncidenceGraph& graph, const CosetSet& edge_subset,
                                      const FoldStep& step, const HostGraph& host,
                                      long long budget = kDefaultHomBudget);

}  // namespace coxperc
