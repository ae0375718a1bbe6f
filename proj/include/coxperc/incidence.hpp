#pragma once

#include "coxperc/group.hpp"

#include <array>
#include <string>
#include <vector>

namespace coxperc {

// The r-partite incidence structure on the quotients W/W_{I_i}: vertices are
// cosets (numbered part-major), edges are the cosets of the intersection
// parabolic, and proj[i] maps each edge to its part-i endpoint.
struct IncidenceGraph {
  CoxeterSystem system;
  std::vector<std::vector<int>> subsets;
  std::vector<CosetTable> parts;
  CosetTable edge_table;
  std::vector<std::vector<int>> proj;

  int parts_count() const { return static_cast<int>(parts.size()); }
  int edge_count() const { return edge_table.size(); }
  int vertex_count() const {
    int n = 0;
    for (const auto& p : parts) n += p.size();
    return n;
  }
  int part_offset(int i) const {
    int n = 0;
    for (int k = 0; k < i; ++k) n += parts[k].size();
    return n;
  }
  int vertex_id(int part, int coset) const { return part_offset(part) + coset; }
  std::vector<int> edge_vertices(int e) const {
    std::vector<int> out;
    out.reserve(parts_count());
    for (int i = 0; i < parts_count(); ++i) out.push_back(vertex_id(i, proj[i][e]));
    return out;
  }
};

IncidenceGraph build_incidence_graph(const CoxeterSystem& sys,
                                     std::vector<std::vector<int>> subsets,
                                     long cap = kDefaultCosetCap);

// Bipartite graph between W/W_1 and the disjoint union of the remaining
// quotients; each r-edge contributes its star and parallel edges collapse, so
// the class-i edges are exactly the cosets of W_{I_1 cap I_i}.
struct Bigraph {
  CoxeterSystem system;
  std::vector<int> left_subset;
  std::vector<std::vector<int>> right_subsets;
  CosetTable left;
  std::vector<CosetTable> right;
  std::vector<std::array<int, 3>> edges;  // (left coset, right class, right coset)

  int left_size() const { return left.size(); }
  int right_size() const {
    int n = 0;
    for (const auto& p : right) n += p.size();
    return n;
  }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

Bigraph build_bigraph(const CoxeterSystem& sys, std::vector<int> first,
                      std::vector<std::vector<int>> rest, long cap = kDefaultCosetCap);

enum class Side : unsigned char { L, R, F };

// Per-part tripartition induced by a reflection: a coset lands in L/R/F by
// the sign of the depth change under the reflection's action. Edge labels
// apply the same rule on the edge table.
struct ReflectionSides {
  Reflection t;
  std::vector<std::vector<Side>> part_sides;
  std::vector<Side> edge_sides;

  std::vector<int> part_set(int part, Side s) const {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(part_sides[part].size()); ++c)
      if (part_sides[part][c] == s) out.push_back(c);
    return out;
  }
};

std::vector<Side> classify_on_table(const CosetTable& table, std::span<const int> word);
ReflectionSides classify_reflection(const IncidenceGraph& graph, const Reflection& t);

// The five clauses of the cut-involution property for a reflection's action.
struct CutInvolutionCheck {
  bool preserves_structure = false;  // permutes parts, commutes with projections
  bool involution = false;
  bool fixed_matches = false;  // F is exactly the fixed set
  bool swaps_sides = false;    // the action exchanges L and R
  bool no_mixed_edge = false;  // no edge meets both L and R

  bool pass() const {
    return preserves_structure && involution && fixed_matches && swaps_sides && no_mixed_edge;
  }
  std::string failed_clauses() const;
};

CutInvolutionCheck verify_cut_involution(const IncidenceGraph& graph, const Reflection& t);

struct GraphShape {
  bool connected = false;
  bool has_cycle = false;
  std::vector<int> part_sizes;
  std::vector<int> part_degrees;
  // r == 2 predicates for the tree/connectivity comparison
  bool pair_stats = false;
  bool subsets_nested = false;  // I within J or J within I
  bool union_is_all = false;
};

GraphShape graph_shape(const IncidenceGraph& graph);

// Combined system for the bipartite tensor product of two reflection graphs:
// block-diagonal matrix, relabelled generators, unioned subset pairs.
struct TensorResult {
  CoxeterSystem system;
  std::vector<int> first;
  std::vector<int> second;
};

TensorResult tensor_system(const CoxeterSystem& a, const std::vector<int>& ia,
                           const std::vector<int>& ja, const CoxeterSystem& b,
                           const std::vector<int>& ib, const std::vector<int>& jb);

std::string to_dot(const IncidenceGraph& graph);
std::string to_json_text(const IncidenceGraph& graph);
std::string to_dot(const Bigraph& graph);
std::string to_json_text(const Bigraph& graph);

}  // namespace coxperc
