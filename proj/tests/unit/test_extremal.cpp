#include "coxperc/extremal.hpp"
#include "coxperc/errors.hpp"

#include <doctest.h>

using namespace coxperc;

TEST_CASE("exponent report for the F4 codimension-one pair") {
  auto sys = built_in_system("F4");
  auto graph = build_incidence_graph(sys, {{1, 2, 3}, {0, 1, 2}});
  auto r = extremal_exponent(graph);
  CHECK(r.v == 48);
  CHECK(r.e == 144);
  CHECK(r.t_max == 24);
  CHECK(r.deg_a == 6);
  CHECK(r.deg_b == 6);
  CHECK(r.c == Rational(23, 120));
  CHECK(r.exponent == Rational(217, 120));
  CHECK(r.furedi_r == 6);
  CHECK(r.furedi_exponent == Rational(11, 6));
  CHECK(r.beats_furedi);
  CHECK_FALSE(r.is_complete_bipartite);
  CHECK(r.verdict == ConjectureVerdict::confirms_instance);
  CHECK(r.note.find("109/60") != std::string::npos);
  CHECK(to_json_text(r).find("217/120") != std::string::npos);
}

TEST_CASE("exponent report for the hexagon") {
  auto sys = built_in_system("A2");
  auto graph = build_incidence_graph(sys, {{0}, {1}});
  auto r = extremal_exponent(graph);
  CHECK(r.c == Rational(2, 3));
  CHECK(r.exponent == Rational(4, 3));
  CHECK(r.note.empty());
}

TEST_CASE("exponent report for K_{2,2}") {
  auto sys = built_in_system("I2(2)");
  auto graph = build_incidence_graph(sys, {{0}, {1}});
  auto r = extremal_exponent(graph);
  CHECK(r.c == Rational(1, 2));
  CHECK(r.exponent == Rational(3, 2));
  CHECK(r.is_complete_bipartite);
  CHECK(r.verdict == ConjectureVerdict::equals_krr);
  CHECK_FALSE(r.beats_furedi);
}

TEST_CASE("identical subsets give the degenerate matching") {
  auto sys = built_in_system("A2");
  auto graph = build_incidence_graph(sys, {{0}, {0}});
  CHECK_THROWS_WITH_AS(extremal_exponent(graph), doctest::Contains("DEGENERATE"), Error);
}

TEST_CASE("balanced exponent closed form") {
  auto tight = balanced_exponent(4, 2);
  CHECK(tight.c == Rational(1, 2));
  CHECK(tight.gap == 0);
  CHECK(balanced_exponent(48, 6).c == Rational(23, 120));
  CHECK(balanced_exponent(8, 3).c == Rational(3, 8));
  CHECK_THROWS_WITH_AS(balanced_exponent(4, 3), doctest::Contains("BAD_INPUT"), Error);
  CHECK_THROWS_AS(balanced_exponent(7, 2), Error);

  for (long long r = 2; r <= 7; ++r)
    for (long long v = 2 * r; v <= 60; v += 2) {
      auto b = balanced_exponent(v, r);
      CHECK(b.gap == Rational(v - 2 * r, v * (r - 1) * r));
      CHECK((b.gap == 0) == (v == 2 * r));
    }
}

TEST_CASE("balanced corollary agrees with the report on regular graphs") {
  struct Case {
    const char* name;
    std::vector<int> i, j;
  };
  for (const auto& c : {Case{"A2", {0}, {1}}, Case{"I2(2)", {0}, {1}},
                        Case{"F4", {1, 2, 3}, {0, 1, 2}}, Case{"I2(6)", {0}, {1}}}) {
    auto graph = build_incidence_graph(built_in_system(c.name), {c.i, c.j});
    auto r = extremal_exponent(graph);
    REQUIRE(r.part_a == r.part_b);
    auto b = balanced_exponent(r.v, r.deg_a);
    CHECK(b.c == r.c);
    CHECK(b.gap == r.c - Rational(1, r.furedi_r));
  }
}

TEST_CASE("inclusion graph stats reproduce the documented instances") {
  auto s623 = inclusion_graph_stats(6, 2, 3);
  CHECK(s623.part_a == 15);
  CHECK(s623.part_b == 20);
  CHECK(s623.edges == 60);
  CHECK(s623.comparison_case == 1);
  CHECK_FALSE(s623.complemented);
  CHECK(s623.lhs == Rational(2, 3));
  CHECK(s623.rhs == Rational(7, 10));
  CHECK(s623.improves);

  auto s1012 = inclusion_graph_stats(10, 1, 2);
  CHECK(s1012.lhs == Rational(1, 2));
  CHECK(s1012.rhs == Rational(1, 5));
  CHECK_FALSE(s1012.improves);

  auto s523 = inclusion_graph_stats(5, 2, 3);
  CHECK(s523.comparison_case == 2);
  CHECK_FALSE(s523.complemented);
  CHECK(s523.lhs == Rational(2, 3));
  CHECK(s523.rhs == Rational(9, 10));
  CHECK(s523.improves);

  CHECK_THROWS_WITH_AS(inclusion_graph_stats(5, 2, 2), doctest::Contains("BAD_RANGE"), Error);
  CHECK_THROWS_AS(inclusion_graph_stats(5, 0, 2), Error);
}

TEST_CASE("complementation reduction kicks in above the midpoint") {
  auto upper = inclusion_graph_stats(6, 4, 5);  // complements to (1, 2)
  CHECK(upper.comparison_case == 1);
  CHECK(upper.complemented);
  CHECK(upper.used_a == 1);
  CHECK(upper.used_b == 2);
  auto lower = inclusion_graph_stats(6, 1, 2);
  CHECK(upper.lhs == lower.lhs);
  CHECK(upper.rhs == lower.rhs);
  CHECK(upper.c == lower.c);
}

TEST_CASE("edge-count formulas agree for all shapes up to m = 40") {
  for (unsigned m = 3; m <= 40; ++m)
    for (unsigned a = 1; a < m; ++a)
      for (unsigned b = a + 1; b < m; ++b)
        CHECK(binomial(m, a) * binomial(m - a, b - a) == binomial(m, b) * binomial(b, a));
}

TEST_CASE("cross validation against subset inclusion") {
  auto v412 = cross_validate_inclusion(4, 1, 2);
  CHECK(v412.isomorphic);
  CHECK(v412.part_a == 4);
  CHECK(v412.part_b == 6);
  CHECK(v412.edges == 12);

  auto v413 = cross_validate_inclusion(4, 1, 3);
  CHECK(v413.isomorphic);
  CHECK(v413.part_a == 4);
  CHECK(v413.part_b == 4);
  CHECK(v413.edges == 12);

  CHECK_THROWS_WITH_AS(cross_validate_inclusion(5, 2, 2), doctest::Contains("BAD_RANGE"), Error);
}

TEST_CASE("cross validation sweeps every shape up to m = 6") {
  for (unsigned m = 3; m <= 6; ++m)
    for (unsigned a = 1; a < m; ++a)
      for (unsigned b = a + 1; b < m; ++b) {
        INFO("m=", m, " a=", a, " b=", b);
        CHECK(cross_validate_inclusion(m, a, b).isomorphic);
      }
}
