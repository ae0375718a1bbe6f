#include "coxperc/incidence.hpp"
#include "coxperc/errors.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace coxperc;

namespace {
const Reflection& refl_by_word(const Group& g, const std::vector<int>& word) {
  int idx = g.from_word(word);
  for (const auto& t : g.reflections())
    if (t.element.index == idx) return t;
  throw std::runtime_error("not a reflection");
}
}  // namespace

TEST_CASE("the A2 singleton pair is a hexagon") {
  auto sys = built_in_system("A2");
  auto g = build_incidence_graph(sys, {{0}, {1}});
  CHECK(g.parts[0].size() == 3);
  CHECK(g.parts[1].size() == 3);
  CHECK(g.edge_count() == 6);
  auto shape = graph_shape(g);
  CHECK(shape.connected);
  CHECK(shape.has_cycle);
  CHECK(shape.part_degrees == std::vector<int>{2, 2});
  CHECK(shape.union_is_all);
  CHECK_FALSE(shape.subsets_nested);
}

TEST_CASE("the I2(2) singleton pair is K_{2,2}") {
  auto sys = built_in_system("I2(2)");
  auto g = build_incidence_graph(sys, {{0}, {1}});
  CHECK(g.parts[0].size() == 2);
  CHECK(g.parts[1].size() == 2);
  CHECK(g.edge_count() == 4);
  auto shape = graph_shape(g);
  CHECK(shape.connected);
  CHECK(shape.has_cycle);
  CHECK(shape.part_degrees == std::vector<int>{2, 2});
}

TEST_CASE("F4 codimension-one pair has the expected counts") {
  auto sys = built_in_system("F4");
  auto g = build_incidence_graph(sys, {{1, 2, 3}, {0, 1, 2}});
  CHECK(g.parts[0].size() == 24);
  CHECK(g.parts[1].size() == 24);
  CHECK(g.edge_count() == 144);
  CHECK(graph_shape(g).part_degrees == std::vector<int>{6, 6});
}

TEST_CASE("edge counts and fibers follow the intersection parabolic") {
  for (const char* name : {"A3", "B3"}) {
    auto sys = built_in_system(name);
    Group g(sys);
    for (int i = 0; i < sys.rank(); ++i)
      for (int j = 0; j < sys.rank(); ++j) {
        if (i == j) continue;
        auto graph = build_incidence_graph(sys, {{i}, {j}});
        // |E| = |W| / |W_{I cap J}|; singletons intersect trivially
        CHECK(graph.edge_count() == g.order());
        for (int part = 0; part < 2; ++part) {
          std::vector<int> fiber(graph.parts[part].size(), 0);
          for (int e = 0; e < graph.edge_count(); ++e) ++fiber[graph.proj[part][e]];
          for (int c = 0; c < graph.parts[part].size(); ++c)
            CHECK(fiber[c] == g.order() / graph.parts[part].size());
        }
      }
  }
}

TEST_CASE("forest case: nested subsets give no cycle") {
  auto sys = built_in_system("A2");
  auto g = build_incidence_graph(sys, {{}, {1}});
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 6);
  auto shape = graph_shape(g);
  CHECK_FALSE(shape.has_cycle);
  CHECK_FALSE(shape.connected);
  CHECK(shape.subsets_nested);
}

TEST_CASE("classify_reflection on the hexagon") {
  auto sys = built_in_system("A2");
  Group g(sys);
  auto graph = build_incidence_graph(sys, {{0}, {1}});
  auto sides = classify_reflection(graph, refl_by_word(g, {0}));
  // part 0 is W/W_{s1}: identity coset fixed, s2-coset raised, s1s2-coset lowered
  CHECK(sides.part_sides[0][0] == Side::F);
  CHECK(sides.part_sides[0][1] == Side::L);
  CHECK(sides.part_sides[0][2] == Side::R);
  CHECK(sides.part_set(0, Side::L) == std::vector<int>{1});
  CHECK(sides.part_set(0, Side::R) == std::vector<int>{2});
  CHECK(sides.part_set(0, Side::F) == std::vector<int>{0});

  // classification is pure: equal output on repeat
  auto again = classify_reflection(graph, refl_by_word(g, {0}));
  CHECK(again.part_sides == sides.part_sides);
  CHECK(again.edge_sides == sides.edge_sides);
}

TEST_CASE("a part by the full generating set is a single fixed coset") {
  auto sys = built_in_system("A2");
  Group g(sys);
  auto graph = build_incidence_graph(sys, {{0, 1}, {0}});
  for (const auto& t : g.reflections()) {
    auto sides = classify_reflection(graph, t);
    CHECK(sides.part_sides[0] == std::vector<Side>{Side::F});
  }
}

TEST_CASE("fixed-points law: a coset is fixed iff its depth is preserved") {
  for (const char* name : {"A3", "B3", "I2(6)", "A2xI2(2)"}) {
    auto sys = built_in_system(name);
    Group g(sys);
    QuotientCache cache(g);
    std::vector<std::vector<int>> subsets = {{}, {0}, {1}};
    for (const auto& I : subsets) {
      const auto& quot = cache.table(I);
      for (const auto& t : g.reflections()) {
        auto sides = classify_on_table(quot, t.element.word);
        for (int c = 0; c < quot.size(); ++c) {
          bool fixed = quot.apply_word(c, t.element.word) == c;
          CHECK(fixed == (sides[c] == Side::F));
        }
      }
    }
  }
}

TEST_CASE("verify_cut_involution passes for every reflection on small graphs") {
  for (const char* name : {"A2", "A3", "B3", "A2xI2(2)"}) {
    auto sys = built_in_system(name);
    Group g(sys);
    const int n = sys.rank();
    // all families of subsets of size >= n-2, bipartite slices
    std::vector<std::vector<int>> codim;
    for (int omit = 0; omit < n; ++omit) {
      std::vector<int> s;
      for (int k = 0; k < n; ++k)
        if (k != omit) s.push_back(k);
      codim.push_back(s);
    }
    for (size_t a = 0; a < codim.size(); ++a)
      for (size_t b = 0; b < codim.size(); ++b) {
        auto graph = build_incidence_graph(sys, {codim[a], codim[b]});
        for (const auto& t : g.reflections()) {
          auto check = verify_cut_involution(graph, t);
          INFO(name, " pair ", a, ",", b, " clauses ", check.failed_clauses());
          CHECK(check.pass());
        }
      }
  }
}

TEST_CASE("cut involutions across codimension <= 2 families and random families") {
  std::mt19937_64 rng(0);
  for (const char* name : {"A3", "B3"}) {
    auto sys = built_in_system(name);
    Group g(sys);
    const int n = sys.rank();
    std::vector<std::vector<int>> big;  // all subsets with |I| >= n - 2
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> s;
      for (int k = 0; k < n; ++k)
        if (mask & (1 << k)) s.push_back(k);
      if (static_cast<int>(s.size()) >= n - 2) big.push_back(std::move(s));
    }
    for (const auto& a : big)
      for (const auto& b : big) {
        auto graph = build_incidence_graph(sys, {a, b});
        for (const auto& t : g.reflections()) CHECK(verify_cut_involution(graph, t).pass());
      }
    for (int family = 0; family < 20; ++family) {
      int r = 2 + static_cast<int>(rng() % 2);
      std::vector<std::vector<int>> subsets;
      for (int i = 0; i < r; ++i) {
        std::vector<int> s;
        for (int k = 0; k < n; ++k)
          if (rng() % 2) s.push_back(k);
        subsets.push_back(std::move(s));
      }
      auto graph = build_incidence_graph(sys, subsets);
      for (const auto& t : g.reflections()) CHECK(verify_cut_involution(graph, t).pass());
    }
  }
}

TEST_CASE("cut involutions also pass on a three-part hypergraph") {
  auto sys = built_in_system("A3");
  Group g(sys);
  auto graph = build_incidence_graph(sys, {{0}, {1}, {2}});
  CHECK(graph.parts_count() == 3);
  for (const auto& t : g.reflections()) CHECK(verify_cut_involution(graph, t).pass());
}

TEST_CASE("bigraph of A2 over {s1} | {s2}, empty") {
  auto sys = built_in_system("A2");
  auto bg = build_bigraph(sys, {0}, {{1}, {}});
  CHECK(bg.left_size() == 3);
  CHECK(bg.right_size() == 3 + 6);
  CHECK(bg.edge_count() == 12);
  // r = 2 bigraph coincides with the incidence graph
  auto bg2 = build_bigraph(sys, {0}, {{1}});
  auto graph = build_incidence_graph(sys, {{0}, {1}});
  CHECK(bg2.edge_count() == graph.edge_count());
  std::set<std::pair<int, int>> be, ge;
  for (const auto& e : bg2.edges) be.emplace(e[0], e[2]);
  for (int e = 0; e < graph.edge_count(); ++e) ge.emplace(graph.proj[0][e], graph.proj[1][e]);
  CHECK(be == ge);
}

TEST_CASE("tensor of the hexagon and K_{2,2} data is the 2-blow-up of C6") {
  auto a2 = built_in_system("A2");
  auto i22 = built_in_system("I2(2)");
  auto tensor = tensor_system(a2, {0}, {1}, i22, {0}, {1});
  CHECK(tensor.system.rank() == 4);
  CHECK(tensor.first == std::vector<int>{0, 2});
  CHECK(tensor.second == std::vector<int>{1, 3});
  auto graph = build_incidence_graph(tensor.system, {tensor.first, tensor.second});
  CHECK(graph.parts[0].size() == 6);
  CHECK(graph.parts[1].size() == 6);
  CHECK(graph.edge_count() == 24);
  CHECK(graph_shape(graph).part_degrees == std::vector<int>{4, 4});

  // part sizes multiply
  auto left = build_incidence_graph(a2, {{0}, {1}});
  auto right = build_incidence_graph(i22, {{0}, {1}});
  CHECK(graph.parts[0].size() == left.parts[0].size() * right.parts[0].size());
  CHECK(graph.edge_count() == left.edge_count() * right.edge_count());
}

TEST_CASE("tensor with the empty system is the identity") {
  auto a2 = built_in_system("A2");
  CoxeterSystem empty{"", {}, {}};
  auto tensor = tensor_system(a2, {0}, {1}, empty, {}, {});
  CHECK(tensor.system.rank() == 2);
  CHECK(tensor.first == std::vector<int>{0});
  CHECK(tensor.second == std::vector<int>{1});
}

TEST_CASE("export formats are deterministic and well-formed") {
  auto sys = built_in_system("A2");
  auto graph = build_incidence_graph(sys, {{0}, {1}});
  auto dot = to_dot(graph);
  CHECK(dot.find("graph incidence {") == 0);
  CHECK(dot.find("v0 -- v3") != std::string::npos);
  CHECK(dot == to_dot(graph));
  auto js = to_json_text(graph);
  CHECK(js.find("\"system\": \"A2\"") != std::string::npos);
  CHECK(js == to_json_text(graph));

  auto bg = build_bigraph(sys, {0}, {{1}, {}});
  CHECK(to_dot(bg).find("graph bigraph {") == 0);
  CHECK(to_json_text(bg).find("\"edges\"") != std::string::npos);
}
