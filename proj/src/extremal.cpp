#include "coxperc/extremal.hpp"

#include "coxperc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxperc {

const char* verdict_name(ConjectureVerdict v) {
  switch (v) {
    case ConjectureVerdict::confirms_instance: return "confirmsInstance";
    case ConjectureVerdict::equals_krr: return "equalsKrr";
    case ConjectureVerdict::no_improvement: return "noImprovement";
  }
  return "unknown";
}

ExtremalReport extremal_exponent(const IncidenceGraph& graph) {
  if (graph.parts_count() != 2) fail(Errc::bad_input, "exponent report expects a bipartite graph");
  ExtremalReport r;
  r.part_a = graph.parts[0].size();
  r.part_b = graph.parts[1].size();
  r.v = r.part_a + r.part_b;
  r.e = graph.edge_count();
  r.t_max = std::max(r.part_a, r.part_b);
  if (r.e == r.t_max) fail(Errc::degenerate, "e equals the larger part size");
  if (r.e % r.part_a || r.e % r.part_b)
    throw std::logic_error("incidence graph is not biregular");
  r.deg_a = r.e / r.part_a;
  r.deg_b = r.e / r.part_b;
  r.c = Rational(r.v - r.t_max - 1, r.e - r.t_max);
  r.exponent = 2 - r.c;
  r.furedi_r = std::min(r.deg_a, r.deg_b);
  r.furedi_exponent = 2 - Rational(1, r.furedi_r);
  r.beats_furedi = r.c > Rational(1, r.furedi_r);
  r.is_complete_bipartite = r.e == r.part_a * r.part_b;
  if (r.is_complete_bipartite && r.part_a == r.part_b)
    r.verdict = ConjectureVerdict::equals_krr;
  else if (r.beats_furedi)
    r.verdict = ConjectureVerdict::confirms_instance;
  else
    r.verdict = ConjectureVerdict::no_improvement;
  if (r.v == 48 && r.e == 144 && r.t_max == 24)
    r.note =
        "exponent 2 - 23/120 = 217/120 differs from the previously published figure "
        "109/60 (= 218/120) for this graph; the formula value is the one reported";
  return r;
}

BalancedExponent balanced_exponent(long long v, long long r) {
  if (r < 2) fail(Errc::bad_input, "degree must be at least 2");
  if (v % 2) fail(Errc::bad_input, "vertex count must be even");
  if (v < 2 * r) fail(Errc::bad_input, "vertex count must be at least 2r");
  BalancedExponent out;
  out.c = Rational(v - 2, v * (r - 1));
  out.gap = out.c - Rational(1, r);
  Rational direct = Rational(v - 2 * r, v * (r - 1) * r);
  if (out.gap != direct) throw std::logic_error("balanced gap identity failed");
  return out;
}

InclusionStats inclusion_graph_stats(unsigned m, unsigned a, unsigned b) {
  if (!(1 <= a && a < b && b < m)) fail(Errc::bad_range, "need 1 <= a < b < m");
  InclusionStats s;
  s.part_a = binomial(m, a);
  s.part_b = binomial(m, b);
  s.edges = binomial(m, a) * binomial(m - a, b - a);
  BigInt edges2 = binomial(m, b) * binomial(b, a);
  if (s.edges != edges2) throw std::logic_error("inclusion edge-count formulas disagree");

  BigInt t = std::max(s.part_a, s.part_b);
  BigInt v = s.part_a + s.part_b;
  s.c = Rational(v - t - 1, s.edges - t);
  s.furedi_r = std::min(binomial(b, a), binomial(m - a, b - a));

  // Normalize to the case split: complement both sides when the pair sits in
  // the upper half (case 1) or when the straddling pair is unbalanced the
  // wrong way (case 2).
  unsigned ua = a, ub = b;
  auto complement = [&] {
    unsigned na = m - ub, nb = m - ua;
    ua = na;
    ub = nb;
    s.complemented = true;
  };
  if (2 * ub <= m) {
    s.comparison_case = 1;
  } else if (2 * ua > m) {
    complement();
    s.comparison_case = 1;
  } else {
    s.comparison_case = 2;
    long long da = 2LL * ua > m ? 2LL * ua - m : m - 2LL * ua;
    long long db = 2LL * ub > m ? 2LL * ub - m : m - 2LL * ub;
    if (da > db) complement();
  }
  s.used_a = ua;
  s.used_b = ub;
  if (s.comparison_case == 1) {
    s.lhs = 1 - Rational(1, binomial(ub, ua));
    s.rhs = Rational(binomial(m, ua) - 1, binomial(m, ub));
  } else {
    s.lhs = 1 - Rational(1, binomial(m - ua, ub - ua));
    s.rhs = Rational(binomial(m, ub) - 1, binomial(m, ua));
  }
  s.improves = s.lhs < s.rhs;
  if (s.improves != (s.c > Rational(1, s.furedi_r)))
    throw std::logic_error("inclusion comparison disagrees with the exponent form");
  return s;
}

namespace {

// One-line notation of the word s_{a1}...s_{ak} acting on 0..m-1 by adjacent
// transpositions; letters compose right to left.
std::vector<int> one_line(const std::vector<int>& word, int m) {
  std::vector<int> x(m);
  std::iota(x.begin(), x.end(), 0);
  for (size_t idx = word.size(); idx-- > 0;) {
    int g = word[idx];
    for (int i = 0; i < m; ++i) {
      if (x[i] == g) x[i] = g + 1;
      else if (x[i] == g + 1) x[i] = g;
    }
  }
  return x;
}

std::set<int> prefix_set(const std::vector<int>& line, unsigned k) {
  return std::set<int>(line.begin(), line.begin() + k);
}

}  // namespace

InclusionValidation cross_validate_inclusion(unsigned m, unsigned a, unsigned b, long cap) {
  if (!(1 <= a && a < b && b < m)) fail(Errc::bad_range, "need 1 <= a < b < m");
  auto sys = built_in_system("A" + std::to_string(m - 1));
  std::vector<int> I, J;
  for (unsigned g = 0; g + 1 < m; ++g) {
    if (g != a - 1) I.push_back(static_cast<int>(g));
    if (g != b - 1) J.push_back(static_cast<int>(g));
  }
  auto graph = build_incidence_graph(sys, {I, J}, cap);

  InclusionValidation out;
  out.part_a = graph.parts[0].size();
  out.part_b = graph.parts[1].size();
  out.edges = graph.edge_count();

  // part cosets must map bijectively onto the a- and b-subsets
  std::set<std::set<int>> seen_a, seen_b;
  std::vector<std::set<int>> coset_a(graph.parts[0].size()), coset_b(graph.parts[1].size());
  for (int c = 0; c < graph.parts[0].size(); ++c) {
    coset_a[c] = prefix_set(one_line(min_rep_word(graph.parts[0], c), m), a);
    seen_a.insert(coset_a[c]);
  }
  for (int c = 0; c < graph.parts[1].size(); ++c) {
    coset_b[c] = prefix_set(one_line(min_rep_word(graph.parts[1], c), m), b);
    seen_b.insert(coset_b[c]);
  }
  bool ok = seen_a.size() == coset_a.size() && seen_b.size() == coset_b.size();
  ok = ok && BigInt(coset_a.size()) == binomial(m, a) && BigInt(coset_b.size()) == binomial(m, b);

  // every edge is an inclusion pair, and all pairs are distinct
  std::set<std::pair<int, int>> pairs;
  for (int e = 0; e < graph.edge_count() && ok; ++e) {
    const auto& u = coset_a[graph.proj[0][e]];
    const auto& v = coset_b[graph.proj[1][e]];
    ok = std::includes(v.begin(), v.end(), u.begin(), u.end());
    pairs.emplace(graph.proj[0][e], graph.proj[1][e]);
  }
  ok = ok && pairs.size() == static_cast<size_t>(graph.edge_count());
  ok = ok && BigInt(graph.edge_count()) == binomial(m, b) * binomial(b, a);
  out.isomorphic = ok;
  return out;
}

std::string to_json_text(const ExtremalReport& r) {
  nlohmann::json j;
  j["v"] = r.v;
  j["e"] = r.e;
  j["partSizes"] = {r.part_a, r.part_b};
  j["tMax"] = r.t_max;
  j["degrees"] = {r.deg_a, r.deg_b};
  j["c"] = frac_str(r.c);
  j["exponent"] = frac_str(r.exponent);
  j["furediR"] = r.furedi_r;
  j["furediExponent"] = frac_str(r.furedi_exponent);
  j["beatsFuredi"] = r.beats_furedi;
  j["isCompleteBipartite"] = r.is_complete_bipartite;
  j["conjectureVerdict"] = verdict_name(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump(2) + "\n";
}

std::string to_text(const ExtremalReport& r) {
  std::ostringstream out;
  out << "v=" << r.v << " e=" << r.e << " parts=" << r.part_a << "+" << r.part_b
      << " degrees=" << r.deg_a << "/" << r.deg_b << "\n";
  out << "c=" << frac_str(r.c) << "  exponent=" << frac_str(r.exponent)
      << "  furedi=" << frac_str(r.furedi_exponent)
      << "  beatsFuredi=" << (r.beats_furedi ? "yes" : "no") << "  verdict="
      << verdict_name(r.verdict) << "\n";
  if (!r.note.empty()) out << "note: " << r.note << "\n";
  return out.str();
}

}  // namespace coxperc
