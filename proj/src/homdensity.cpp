#include "coxperc/homdensity.hpp"

#include "coxperc/errors.hpp"

#include <algorithm>

namespace coxperc {

HostGraph HostGraph::simple(int n, const std::vector<std::pair<int, int>>& edges) {
  HostGraph g;
  g.n = n;
  g.weight.assign(static_cast<size_t>(n) * n, Rational(0));
  for (auto [a, b] : edges) g.set_edge(a, b, 1);
  return g;
}

void HostGraph::set_edge(int i, int j, const Rational& value) {
  if (i == j) fail(Errc::bad_input, "host graphs are loop-free");
  if (i < 0 || j < 0 || i >= n || j >= n) fail(Errc::bad_index, "host vertex out of range");
  if (value < 0) fail(Errc::bad_input, "edge weights must be nonnegative");
  w(i, j) = value;
  w(j, i) = value;
}

bool HostGraph::unweighted01() const {
  for (const auto& x : weight)
    if (x != 0 && x != 1) return false;
  return true;
}

Rational hom_density(const PatternGraph& pattern, const HostGraph& host, long long budget) {
  if (host.n <= 0) fail(Errc::bad_input, "host graph needs at least one vertex");
  for (auto [a, b] : pattern.edges)
    if (a < 0 || b < 0 || a >= pattern.n || b >= pattern.n)
      fail(Errc::bad_index, "pattern edge out of range");

  BigInt total = 1;
  for (int i = 0; i < pattern.n; ++i) {
    total *= host.n;
    if (total > budget) fail(Errc::budget_exceeded, "host^pattern exceeds the hom budget");
  }
  if (pattern.n == 0) return 1;

  // neighbors among already-assigned pattern vertices
  std::vector<std::vector<int>> earlier(pattern.n);
  for (auto [a, b] : pattern.edges) {
    if (a > b) std::swap(a, b);
    earlier[b].push_back(a);
  }

  std::vector<int> image(pattern.n, 0);
  if (host.unweighted01()) {
    unsigned long long count = 0;
    auto rec = [&](auto&& self, int v) -> void {
      if (v == pattern.n) {
        ++count;
        return;
      }
      for (int x = 0; x < host.n; ++x) {
        bool ok = true;
        for (int u : earlier[v])
          if (host.w(x, image[u]) == 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        image[v] = x;
        self(self, v + 1);
      }
    };
    rec(rec, 0);
    return Rational(BigInt(count), total);
  }

  Rational sum = 0;
  auto rec = [&](auto&& self, int v, const Rational& acc) -> void {
    if (v == pattern.n) {
      sum += acc;
      return;
    }
    for (int x = 0; x < host.n; ++x) {
      Rational next = acc;
      bool ok = true;
      for (int u : earlier[v]) {
        const Rational& wt = host.w(x, image[u]);
        if (wt == 0) {
          ok = false;
          break;
        }
        next *= wt;
      }
      if (!ok) continue;
      image[v] = x;
      self(self, v + 1, next);
    }
  };
  rec(rec, 0, Rational(1));
  return sum / Rational(total);
}

PatternGraph pattern_from_graph(const IncidenceGraph& graph) {
  if (graph.parts_count() != 2) fail(Errc::bad_input, "patterns come from bipartite graphs");
  PatternGraph p;
  p.n = graph.vertex_count();
  for (int e = 0; e < graph.edge_count(); ++e) {
    auto vs = graph.edge_vertices(e);
    p.edges.emplace_back(vs[0], vs[1]);
  }
  return p;
}

PatternGraph induced_pattern(const IncidenceGraph& graph, const std::vector<bool>& keep_vertex) {
  PatternGraph whole = pattern_from_graph(graph);
  std::vector<int> id(whole.n, -1);
  PatternGraph out;
  for (int v = 0; v < whole.n; ++v)
    if (keep_vertex[v]) id[v] = out.n++;
  for (auto [a, b] : whole.edges)
    if (id[a] >= 0 && id[b] >= 0) out.edges.emplace_back(id[a], id[b]);
  return out;
}

PatternGraph spanning_pattern(const IncidenceGraph& graph, const CosetSet& keep_edge) {
  PatternGraph whole = pattern_from_graph(graph);
  PatternGraph out;
  out.n = whole.n;
  for (size_t e = keep_edge.find_first(); e != CosetSet::npos; e = keep_edge.find_next(e))
    out.edges.push_back(whole.edges[e]);
  return out;
}

InequalityCheck check_cut_involution_inequality(const IncidenceGraph& graph, const Reflection& t,
                                                const HostGraph& host, long long budget) {
  auto sides = classify_reflection(graph, t);
  std::vector<bool> in_f(graph.vertex_count(), false), in_lf(graph.vertex_count(), false);
  for (int i = 0; i < graph.parts_count(); ++i)
    for (int c = 0; c < graph.parts[i].size(); ++c) {
      Side s = sides.part_sides[i][c];
      int v = graph.vertex_id(i, c);
      if (s == Side::F) in_f[v] = true;
      if (s == Side::F || s == Side::L) in_lf[v] = true;
    }
  InequalityCheck out;
  Rational whole = hom_density(pattern_from_graph(graph), host, budget);
  Rational on_f = hom_density(induced_pattern(graph, in_f), host, budget);
  Rational on_lf = hom_density(induced_pattern(graph, in_lf), host, budget);
  out.lhs = whole * on_f;
  out.rhs = on_lf * on_lf;
  out.holds = out.lhs >= out.rhs;
  return out;
}

InequalityCheck check_fold_inequality(const IncidenceGraph& graph, const CosetSet& edge_subset,
                                      const FoldStep& step, const HostGraph& host,
                                      long long budget) {
  FoldStep plus{step.reflection_word, FoldDirection::plus};
  FoldStep minus{step.reflection_word, FoldDirection::minus};
  CosetSet jp = fold(graph.edge_table, edge_subset, plus);
  CosetSet jm = fold(graph.edge_table, edge_subset, minus);
  Rational d0 = hom_density(spanning_pattern(graph, edge_subset), host, budget);
  Rational dp = hom_density(spanning_pattern(graph, jp), host, budget);
  Rational dm = hom_density(spanning_pattern(graph, jm), host, budget);
  InequalityCheck out;
  out.lhs = d0 * d0;
  out.rhs = dp * dm;
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace coxperc
