#include "coxperc/incidence.hpp"

#include "coxperc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxperc {

namespace {

std::vector<int> normalize_subset(const CoxeterSystem& sys, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int g : subset)
    if (g < 0 || g >= sys.rank()) fail(Errc::bad_subset, "generator index out of range");
  return subset;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

IncidenceGraph build_incidence_graph(const CoxeterSystem& sys,
                                     std::vector<std::vector<int>> subsets, long cap) {
  if (subsets.empty()) fail(Errc::bad_subset, "need at least one part");
  IncidenceGraph g;
  g.system = sys;
  for (auto& s : subsets) g.subsets.push_back(normalize_subset(sys, std::move(s)));

  std::vector<int> common = g.subsets[0];
  for (size_t i = 1; i < g.subsets.size(); ++i) common = intersect_sorted(common, g.subsets[i]);

  for (const auto& s : g.subsets) g.parts.push_back(enumerate_cosets(sys, s, cap));
  g.edge_table = enumerate_cosets(sys, common, cap);

  g.proj.resize(g.parts.size());
  for (size_t i = 0; i < g.parts.size(); ++i) {
    g.proj[i].resize(g.edge_table.size());
    for (int e = 0; e < g.edge_table.size(); ++e)
      g.proj[i][e] = g.parts[i].apply_word(0, min_rep_word(g.edge_table, e));
  }
  return g;
}

Bigraph build_bigraph(const CoxeterSystem& sys, std::vector<int> first,
                      std::vector<std::vector<int>> rest, long cap) {
  if (rest.empty()) fail(Errc::bad_subset, "need at least one right part");
  Bigraph g;
  g.system = sys;
  g.left_subset = normalize_subset(sys, std::move(first));
  g.left = enumerate_cosets(sys, g.left_subset, cap);
  for (auto& s : rest) {
    g.right_subsets.push_back(normalize_subset(sys, std::move(s)));
    g.right.push_back(enumerate_cosets(sys, g.right_subsets.back(), cap));
  }
  for (size_t i = 0; i < g.right.size(); ++i) {
    auto pair_table = enumerate_cosets(sys, intersect_sorted(g.left_subset, g.right_subsets[i]), cap);
    for (int e = 0; e < pair_table.size(); ++e) {
      auto word = min_rep_word(pair_table, e);
      g.edges.push_back({g.left.apply_word(0, word), static_cast<int>(i),
                         g.right[i].apply_word(0, word)});
    }
  }
  return g;
}

std::vector<Side> classify_on_table(const CosetTable& table, std::span<const int> word) {
  std::vector<Side> out(table.size());
  for (int c = 0; c < table.size(); ++c) {
    int d = table.depth[table.apply_word(c, word)] - table.depth[c];
    out[c] = d > 0 ? Side::L : (d < 0 ? Side::R : Side::F);
  }
  return out;
}

ReflectionSides classify_reflection(const IncidenceGraph& graph, const Reflection& t) {
  ReflectionSides out;
  out.t = t;
  for (const auto& part : graph.parts)
    out.part_sides.push_back(classify_on_table(part, t.element.word));
  out.edge_sides = classify_on_table(graph.edge_table, t.element.word);
  return out;
}

std::string CutInvolutionCheck::failed_clauses() const {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (!ok) {
      if (!out.empty()) out += ",";
      out += name;
    }
  };
  add(preserves_structure, "preserves_structure");
  add(involution, "involution");
  add(fixed_matches, "fixed_matches");
  add(swaps_sides, "swaps_sides");
  add(no_mixed_edge, "no_mixed_edge");
  return out;
}

CutInvolutionCheck verify_cut_involution(const IncidenceGraph& graph, const Reflection& t) {
  CutInvolutionCheck res;
  const auto word = std::span<const int>(t.element.word);
  const int r = graph.parts_count();

  std::vector<std::vector<int>> pperm(r);
  for (int i = 0; i < r; ++i) {
    pperm[i].resize(graph.parts[i].size());
    for (int c = 0; c < graph.parts[i].size(); ++c)
      pperm[i][c] = graph.parts[i].apply_word(c, word);
  }
  std::vector<int> eperm(graph.edge_count());
  for (int e = 0; e < graph.edge_count(); ++e) eperm[e] = graph.edge_table.apply_word(e, word);

  auto sides = classify_reflection(graph, t);

  res.preserves_structure = true;
  for (int e = 0; e < graph.edge_count() && res.preserves_structure; ++e)
    for (int i = 0; i < r; ++i)
      if (graph.proj[i][eperm[e]] != pperm[i][graph.proj[i][e]]) {
        res.preserves_structure = false;
        break;
      }

  res.involution = true;
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < graph.parts[i].size(); ++c)
      if (pperm[i][pperm[i][c]] != c) res.involution = false;
  for (int e = 0; e < graph.edge_count(); ++e)
    if (eperm[eperm[e]] != e) res.involution = false;

  res.fixed_matches = true;
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < graph.parts[i].size(); ++c)
      if ((sides.part_sides[i][c] == Side::F) != (pperm[i][c] == c)) res.fixed_matches = false;
  for (int e = 0; e < graph.edge_count(); ++e)
    if ((sides.edge_sides[e] == Side::F) != (eperm[e] == e)) res.fixed_matches = false;

  res.swaps_sides = true;
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < graph.parts[i].size(); ++c) {
      if (sides.part_sides[i][c] == Side::L && sides.part_sides[i][pperm[i][c]] != Side::R)
        res.swaps_sides = false;
      if (sides.part_sides[i][c] == Side::R && sides.part_sides[i][pperm[i][c]] != Side::L)
        res.swaps_sides = false;
    }

  res.no_mixed_edge = true;
  for (int e = 0; e < graph.edge_count(); ++e) {
    bool has_l = false, has_r = false;
    for (int i = 0; i < r; ++i) {
      Side s = sides.part_sides[i][graph.proj[i][e]];
      has_l = has_l || s == Side::L;
      has_r = has_r || s == Side::R;
    }
    if (has_l && has_r) res.no_mixed_edge = false;
  }
  return res;
}

GraphShape graph_shape(const IncidenceGraph& graph) {
  GraphShape shape;
  const int v = graph.vertex_count();
  for (const auto& p : graph.parts) shape.part_sizes.push_back(p.size());

  std::vector<int> degree(v, 0);
  UnionFind uf(v);
  for (int e = 0; e < graph.edge_count(); ++e) {
    auto vs = graph.edge_vertices(e);
    for (size_t i = 0; i < vs.size(); ++i) {
      ++degree[vs[i]];
      if (i) uf.unite(vs[0], vs[i]);
    }
  }

  for (int i = 0; i < graph.parts_count(); ++i) {
    int off = graph.part_offset(i);
    int d = degree[off];
    for (int c = 0; c < graph.parts[i].size(); ++c)
      if (degree[off + c] != d)
        throw std::logic_error("incidence graph part is not degree-uniform");
    shape.part_degrees.push_back(d);
  }

  std::vector<int> comp_vertices, comp_edges;
  std::vector<int> comp_id(v, -1);
  int ncomp = 0;
  for (int x = 0; x < v; ++x) {
    int root = uf.find(x);
    if (comp_id[root] < 0) {
      comp_id[root] = ncomp++;
      comp_vertices.push_back(0);
      comp_edges.push_back(0);
    }
    ++comp_vertices[comp_id[root]];
  }
  for (int e = 0; e < graph.edge_count(); ++e)
    ++comp_edges[comp_id[uf.find(graph.edge_vertices(e)[0])]];

  shape.connected = ncomp == 1;
  shape.has_cycle = false;
  for (int k = 0; k < ncomp; ++k)
    if (comp_edges[k] >= comp_vertices[k]) shape.has_cycle = true;

  if (graph.parts_count() == 2) {
    shape.pair_stats = true;
    const auto& a = graph.subsets[0];
    const auto& b = graph.subsets[1];
    shape.subsets_nested = std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
                           std::includes(b.begin(), b.end(), a.begin(), a.end());
    std::vector<int> uni;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
    shape.union_is_all = static_cast<int>(uni.size()) == graph.system.rank();
  }
  return shape;
}

TensorResult tensor_system(const CoxeterSystem& a, const std::vector<int>& ia,
                           const std::vector<int>& ja, const CoxeterSystem& b,
                           const std::vector<int>& ib, const std::vector<int>& jb) {
  TensorResult out;
  out.system = direct_product(a, b);
  out.first = ia;
  out.second = ja;
  const int shift = a.rank();
  for (int g : ib) out.first.push_back(g + shift);
  for (int g : jb) out.second.push_back(g + shift);
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

namespace {

const char* kPartColors[] = {"lightblue", "lightsalmon", "palegreen", "plum",
                             "khaki",     "lightgrey",   "orange",    "cyan"};

}  // namespace

std::string to_dot(const IncidenceGraph& graph) {
  std::ostringstream out;
  out << "graph incidence {\n  rankdir=LR;\n  node [style=filled];\n";
  for (int i = 0; i < graph.parts_count(); ++i) {
    out << "  subgraph cluster_part" << i << " {\n    label=\"part " << i << ": {"
        << subset_to_string(graph.system, graph.subsets[i]) << "}\";\n";
    for (int c = 0; c < graph.parts[i].size(); ++c)
      out << "    v" << graph.vertex_id(i, c) << " [label=\"" << i << ":" << c
          << "\", fillcolor=" << kPartColors[i % 8] << "];\n";
    out << "  }\n";
  }
  for (int e = 0; e < graph.edge_count(); ++e) {
    auto vs = graph.edge_vertices(e);
    if (vs.size() == 2) {
      out << "  v" << vs[0] << " -- v" << vs[1] << ";\n";
    } else {
      out << "  e" << e << " [shape=point];\n";
      for (int x : vs) out << "  e" << e << " -- v" << x << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_json_text(const IncidenceGraph& graph) {
  nlohmann::json j;
  j["system"] = graph.system.name;
  j["parts"] = nlohmann::json::array();
  for (int i = 0; i < graph.parts_count(); ++i) {
    nlohmann::json p;
    p["subset"] = nlohmann::json::array();
    for (int g : graph.subsets[i]) p["subset"].push_back(graph.system.generators[g]);
    p["size"] = graph.parts[i].size();
    j["parts"].push_back(p);
  }
  j["edges"] = nlohmann::json::array();
  for (int e = 0; e < graph.edge_count(); ++e) j["edges"].push_back(graph.edge_vertices(e));
  j["projections"] = graph.proj;
  return j.dump(2) + "\n";
}

std::string to_dot(const Bigraph& graph) {
  std::ostringstream out;
  out << "graph bigraph {\n  rankdir=LR;\n  node [style=filled];\n";
  for (int c = 0; c < graph.left_size(); ++c)
    out << "  l" << c << " [label=\"0:" << c << "\", fillcolor=lightblue];\n";
  int off = 0;
  std::vector<int> offsets;
  for (const auto& p : graph.right) {
    offsets.push_back(off);
    off += p.size();
  }
  for (size_t i = 0; i < graph.right.size(); ++i)
    for (int c = 0; c < graph.right[i].size(); ++c)
      out << "  r" << offsets[i] + c << " [label=\"" << i + 1 << ":" << c
          << "\", fillcolor=" << kPartColors[(i + 1) % 8] << "];\n";
  for (const auto& e : graph.edges) out << "  l" << e[0] << " -- r" << offsets[e[1]] + e[2] << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json_text(const Bigraph& graph) {
  nlohmann::json j;
  j["system"] = graph.system.name;
  j["left"] = {{"subset", nlohmann::json::array()}, {"size", graph.left_size()}};
  for (int g : graph.left_subset) j["left"]["subset"].push_back(graph.system.generators[g]);
  j["right"] = nlohmann::json::array();
  for (size_t i = 0; i < graph.right.size(); ++i) {
    nlohmann::json p;
    p["subset"] = nlohmann::json::array();
    for (int g : graph.right_subsets[i]) p["subset"].push_back(graph.system.generators[g]);
    p["size"] = graph.right[i].size();
    j["right"].push_back(p);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : graph.edges) j["edges"].push_back({e[0], e[1], e[2]});
  return j.dump(2) + "\n";
}

}  // namespace coxperc
