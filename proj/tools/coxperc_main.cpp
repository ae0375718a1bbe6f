// coxperc: finite Coxeter computation, reflection-graph folding certificates,
// and exact extremal-exponent reports.
//
// Exit codes: 0 = pass / FOUND, 1 = verified negative (NOT_FOUND, failed
// inequality, failed audit or verification), 2 = error or guard.

#include "coxperc/audit.hpp"
#include "coxperc/catalog.hpp"
#include "coxperc/errors.hpp"
#include "coxperc/extremal.hpp"
#include "coxperc/homdensity.hpp"
#include "coxperc/percolation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace coxperc;

namespace {

struct CommonOptions {
  std::string system;
  std::string matrix_file;
  std::string subset_i;
  std::string subset_j;
  std::string parts;
  long coset_cap = kDefaultCosetCap;
  std::uint64_t state_cap = std::uint64_t(1) << 20;
  long long hom_budget = kDefaultHomBudget;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
};

void add_system_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--system", opt.system, "built-in system name, e.g. A3, F4, I2(6), A2xI2(2)");
  cmd->add_option("--matrix-file", opt.matrix_file, "JSON file with generators and matrix");
  cmd->add_option("--coset-cap", opt.coset_cap, "coset enumeration cap");
  cmd->add_option("--seed", opt.seed, "seed for sampled checks");
  cmd->add_option("--format", opt.format, "text|json|dot|csv");
  cmd->add_option("--out", opt.out, "output path (default stdout)");
}

CoxeterSystem load_system(const CommonOptions& opt) {
  if (!opt.system.empty() && !opt.matrix_file.empty())
    fail(Errc::bad_input, "give either --system or --matrix-file, not both");
  if (!opt.system.empty()) return built_in_system(opt.system);
  if (!opt.matrix_file.empty()) return system_from_json_file(opt.matrix_file);
  fail(Errc::bad_input, "a system is required (--system or --matrix-file)");
}

void emit(const CommonOptions& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) fail(Errc::bad_input, "cannot write '" + opt.out + "'");
  f << payload;
}

std::vector<std::vector<int>> parse_parts(const CoxeterSystem& sys, const std::string& spec) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, '/')) out.push_back(parse_subset(sys, tok));
  if (out.empty()) fail(Errc::bad_subset, "--parts needs at least one '/'-separated subset");
  return out;
}

long env_coset_cap() {
  if (const char* v = std::getenv("COXPERC_CAP")) {
    try {
      return std::stol(v);
    } catch (...) {
      fail(Errc::bad_input, "COXPERC_CAP is not a number");
    }
  }
  return kDefaultCosetCap;
}

int cmd_group(const CommonOptions& opt) {
  auto sys = load_system(opt);
  Group g(sys, opt.coset_cap);
  std::ostringstream out;
  out << "system " << sys.name << ": order " << g.order() << ", reflections "
      << g.reflections().size() << "\n";
  QuotientCache cache(g);
  for (const std::string& s : {opt.subset_i, opt.subset_j}) {
    if (s.empty()) continue;
    auto I = parse_subset(sys, s);
    out << "quotient by {" << subset_to_string(sys, I) << "}: " << cache.table(I).size()
        << " cosets\n";
  }
  emit(opt, out.str());
  return 0;
}

int cmd_graph(const CommonOptions& opt, bool bigraph_mode) {
  auto sys = load_system(opt);
  std::vector<std::vector<int>> subsets;
  if (!opt.parts.empty()) {
    subsets = parse_parts(sys, opt.parts);
  } else {
    subsets = {parse_subset(sys, opt.subset_i), parse_subset(sys, opt.subset_j)};
  }
  if (bigraph_mode) {
    if (subsets.size() < 2) fail(Errc::bad_subset, "bigraph needs at least two parts");
    auto first = subsets.front();
    subsets.erase(subsets.begin());
    auto graph = build_bigraph(sys, first, subsets, opt.coset_cap);
    if (opt.format == "dot") emit(opt, to_dot(graph));
    else if (opt.format == "json") emit(opt, to_json_text(graph));
    else {
      std::ostringstream out;
      out << "bigraph on " << sys.name << ": left " << graph.left_size() << ", right "
          << graph.right_size() << ", edges " << graph.edge_count() << "\n";
      emit(opt, out.str());
    }
    return 0;
  }
  auto graph = build_incidence_graph(sys, subsets, opt.coset_cap);
  if (opt.format == "dot") {
    emit(opt, to_dot(graph));
  } else if (opt.format == "json") {
    emit(opt, to_json_text(graph));
  } else {
    auto shape = graph_shape(graph);
    std::ostringstream out;
    out << "graph on " << sys.name << ":";
    for (int s : shape.part_sizes) out << " " << s;
    out << " vertices per part, " << graph.edge_count() << " edges; degrees";
    for (int d : shape.part_degrees) out << " " << d;
    out << "; " << (shape.connected ? "connected" : "disconnected") << ", "
        << (shape.has_cycle ? "has a cycle" : "forest") << "\n";
    emit(opt, out.str());
  }
  return 0;
}

int cmd_percolate(const CommonOptions& opt) {
  auto sys = load_system(opt);
  Group g(sys, opt.coset_cap);
  QuotientCache cache(g);
  auto I = parse_subset(sys, opt.subset_i);
  auto cert = build_percolating_sequence(g, cache.table(I));
  emit(opt, opt.format == "json" ? to_json_text(g, cert) : to_text(g, cert));
  return cert.verified ? 0 : 1;
}

int cmd_strong(const CommonOptions& opt, bool all_starts, int start) {
  auto sys = load_system(opt);
  Group g(sys, opt.coset_cap);
  QuotientCache cache(g);
  auto I = parse_subset(sys, opt.subset_i);
  const auto& quot = cache.table(I);
  std::vector<int> starts;
  if (all_starts) {
    for (int w = 1; w < quot.size(); ++w) starts.push_back(w);
  } else {
    starts.push_back(start);
  }
  bool all_ok = true;
  std::ostringstream text;
  nlohmann::json arr = nlohmann::json::array();
  for (int w : starts) {
    auto cert = build_strong_percolating_sequence(g, quot, w);
    all_ok = all_ok && cert.verified;
    if (opt.format == "json") arr.push_back(nlohmann::json::parse(to_json_text(g, cert)));
    else text << "start " << w << ": " << (cert.verified ? "verified" : "FAILED") << ", "
              << cert.steps.size() << " steps\n";
  }
  if (opt.format == "json") emit(opt, arr.dump(2) + "\n");
  else emit(opt, text.str());
  return all_ok ? 0 : 1;
}

int cmd_search(const CommonOptions& opt, const std::string& mode, const std::string& start) {
  auto sys = load_system(opt);
  SearchLimits limits;
  limits.state_cap = opt.state_cap;
  auto parse_pair = [&](int q) -> std::vector<std::pair<int, int>> {
    if (!start.empty()) {
      auto comma = start.find(',');
      if (comma == std::string::npos) fail(Errc::bad_start, "--start wants 'a,b'");
      return {{std::stoi(start.substr(0, comma)), std::stoi(start.substr(comma + 1))}};
    }
    std::vector<std::pair<int, int>> all;
    for (int a = 0; a < q; ++a)
      for (int b = a + 1; b < q; ++b) all.emplace_back(a, b);
    return all;
  };

  std::ostringstream out;
  bool any_not_found = false;
  if (mode == "reflections") {
    Group g(sys, opt.coset_cap);
    QuotientCache cache(g);
    auto I = parse_subset(sys, opt.subset_i);
    const auto& quot = cache.table(I);
    for (auto pair : parse_pair(quot.size())) {
      auto res = strong_search_reflections(g, quot, pair, limits);
      bool found = res.outcome == SearchOutcome::found;
      any_not_found = any_not_found || !found;
      out << "pair {" << pair.first << "," << pair.second << "}: "
          << (found ? "FOUND" : "NOT_FOUND") << " (" << res.states_visited << " states)\n";
    }
  } else if (mode == "cut-involutions") {
    auto I = parse_subset(sys, opt.subset_i);
    auto J = parse_subset(sys, opt.subset_j);
    auto graph = build_incidence_graph(sys, {I, J}, opt.coset_cap);
    for (auto pair : parse_pair(graph.parts[0].size())) {
      auto res = strong_search_cut_involutions(graph, 0, pair, limits);
      bool found = res.outcome == SearchOutcome::found;
      any_not_found = any_not_found || !found;
      out << "pair {" << pair.first << "," << pair.second << "}: "
          << (found ? "FOUND" : "NOT_FOUND") << " (" << res.states_visited << " states, "
          << res.moves_available << " moves)\n";
    }
  } else {
    fail(Errc::bad_input, "--mode must be reflections or cut-involutions");
  }
  out << (any_not_found ? "verdict: NOT_FOUND for at least one start pair\n"
                        : "verdict: FOUND for every start pair\n");
  emit(opt, out.str());
  return any_not_found ? 1 : 0;
}

int cmd_exponent(const CommonOptions& opt) {
  auto sys = load_system(opt);
  auto graph = build_incidence_graph(
      sys, {parse_subset(sys, opt.subset_i), parse_subset(sys, opt.subset_j)}, opt.coset_cap);
  auto r = extremal_exponent(graph);
  if (opt.format == "json") {
    emit(opt, to_json_text(r));
  } else if (opt.format == "csv") {
    std::ostringstream out;
    out << "name,vA,vB,e,dI,dJ,c,exponent,furediExponent,beatsFuredi,verdict\n"
        << sys.name << "," << r.part_a << "," << r.part_b << "," << r.e << "," << r.deg_a << ","
        << r.deg_b << "," << frac_str(r.c) << "," << frac_str(r.exponent) << ","
        << frac_str(r.furedi_exponent) << "," << (r.beats_furedi ? "true" : "false") << ","
        << verdict_name(r.verdict) << "\n";
    emit(opt, out.str());
  } else {
    emit(opt, to_text(r));
  }
  return 0;
}

int cmd_audit(const CommonOptions& opt, long long budget) {
  auto sys = load_system(opt);
  Group g(sys, opt.coset_cap);
  auto report = axiom_audit(g, budget, opt.seed);
  emit(opt, opt.format == "json" ? to_json_text(report) : to_text(report));
  return report.all_pass() ? 0 : 1;
}

int cmd_homcheck(const CommonOptions& opt, int trials) {
  auto sys = load_system(opt);
  Group g(sys, opt.coset_cap);
  auto I = parse_subset(sys, opt.subset_i);
  auto J = parse_subset(sys, opt.subset_j);
  auto graph = build_incidence_graph(sys, {I, J}, opt.coset_cap);

  std::ostringstream out;
  bool all_hold = true;

  // cut-involution inequality: every reflection against every host on <= 3 vertices
  std::vector<HostGraph> hosts;
  hosts.push_back(HostGraph::simple(1, {}));
  hosts.push_back(HostGraph::simple(2, {}));
  hosts.push_back(HostGraph::simple(2, {{0, 1}}));
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<std::pair<int, int>> edges;
    if (mask & 1) edges.emplace_back(0, 1);
    if (mask & 2) edges.emplace_back(0, 2);
    if (mask & 4) edges.emplace_back(1, 2);
    hosts.push_back(HostGraph::simple(3, edges));
  }
  long checked = 0;
  for (const auto& t : g.reflections())
    for (const auto& host : hosts) {
      auto check = check_cut_involution_inequality(graph, t, host, opt.hom_budget);
      all_hold = all_hold && check.holds;
      ++checked;
    }
  out << "cut-involution inequality: " << checked << " cases, "
      << (all_hold ? "all hold" : "VIOLATED") << "\n";

  // fold inequality on seeded random (J, t, host) trials
  std::mt19937_64 rng(opt.seed);
  long fold_checked = 0;
  bool fold_hold = true;
  for (int trial = 0; trial < trials; ++trial) {
    CosetSet jset(graph.edge_count());
    for (int e = 0; e < graph.edge_count(); ++e)
      if (rng() % 2) jset.set(e);
    const auto& t = g.reflections()[rng() % g.reflections().size()];
    FoldStep step{t.element.word, rng() % 2 ? FoldDirection::plus : FoldDirection::minus};
    int nv = 1 + static_cast<int>(rng() % 4);
    HostGraph host;
    host.n = nv;
    host.weight.assign(static_cast<size_t>(nv) * nv, Rational(0));
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b)
        if (rng() % 2) host.set_edge(a, b, 1);
    auto check = check_fold_inequality(graph, jset, step, host, opt.hom_budget);
    fold_hold = fold_hold && check.holds;
    ++fold_checked;
  }
  out << "fold inequality: " << fold_checked << " seeded trials, "
      << (fold_hold ? "all hold" : "VIOLATED") << "\n";
  emit(opt, out.str());
  return (all_hold && fold_hold) ? 0 : 1;
}

int cmd_catalog(const CommonOptions& opt) {
  CatalogOptions copt;
  copt.coset_cap = opt.coset_cap;
  copt.seed = opt.seed;
  auto rows = run_catalog(copt);
  if (opt.format == "json") emit(opt, catalog_json(rows));
  else emit(opt, catalog_csv(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Coxeter-group computation, folding certificates, extremal exponents"};
  app.require_subcommand(1);

  CommonOptions opt;
  opt.coset_cap = env_coset_cap();

  bool all_starts = false;
  bool bigraph_mode = false;
  int start_coset = 1;
  std::string start_pair;
  std::string mode = "reflections";
  long long audit_budget = 10000;
  int hom_trials = 200;

  auto* c_group = app.add_subcommand("group", "order, reflection count, quotient sizes");
  add_system_flags(c_group, opt);
  c_group->add_option("--I", opt.subset_i, "subset of generator labels");
  c_group->add_option("--J", opt.subset_j, "second subset");

  auto* c_graph = app.add_subcommand("graph", "build an incidence graph or bigraph");
  add_system_flags(c_graph, opt);
  c_graph->add_option("--I", opt.subset_i, "first part subset");
  c_graph->add_option("--J", opt.subset_j, "second part subset");
  c_graph->add_option("--parts", opt.parts, "'/'-separated subsets for r parts ('-' = empty)");
  c_graph->add_flag("--bigraph", bigraph_mode, "collapse parts 2..r into one side");

  auto* c_perc = app.add_subcommand("percolate", "build and verify a percolating sequence");
  add_system_flags(c_perc, opt);
  c_perc->add_option("--I", opt.subset_i, "subset defining the quotient");

  auto* c_strong = app.add_subcommand("strong", "build strong percolating sequences");
  add_system_flags(c_strong, opt);
  c_strong->add_option("--I", opt.subset_i, "codimension-one subset");
  c_strong->add_option("--start", start_coset, "nonidentity start coset index");
  c_strong->add_flag("--all-starts", all_starts, "every nonidentity start coset");

  auto* c_search = app.add_subcommand("search", "exhaustive strong-percolation search");
  add_system_flags(c_search, opt);
  c_search->add_option("--I", opt.subset_i, "subset defining the quotient / first part");
  c_search->add_option("--J", opt.subset_j, "second part (cut-involutions mode)");
  c_search->add_option("--mode", mode, "reflections|cut-involutions");
  c_search->add_option("--start", start_pair, "start pair 'a,b' (default: all pairs)");
  c_search->add_option("--state-cap", opt.state_cap, "subset-state cap");

  auto* c_exp = app.add_subcommand("exponent", "extremal exponent report for a pair");
  add_system_flags(c_exp, opt);
  c_exp->add_option("--I", opt.subset_i, "first part subset");
  c_exp->add_option("--J", opt.subset_j, "second part subset");

  auto* c_audit = app.add_subcommand("audit", "machine-check the structural laws");
  add_system_flags(c_audit, opt);
  c_audit->add_option("--budget", audit_budget, "per-law instance budget");

  auto* c_hom = app.add_subcommand("homcheck", "exact homomorphism-density inequalities");
  add_system_flags(c_hom, opt);
  c_hom->add_option("--I", opt.subset_i, "first part subset");
  c_hom->add_option("--J", opt.subset_j, "second part subset");
  c_hom->add_option("--trials", hom_trials, "seeded fold-inequality trials");
  c_hom->add_option("--hom-budget", opt.hom_budget, "map-enumeration budget");

  auto* c_cat = app.add_subcommand("catalog", "exponent catalog over the built-in roster");
  add_system_flags(c_cat, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_group->parsed()) return cmd_group(opt);
    if (c_graph->parsed()) return cmd_graph(opt, bigraph_mode);
    if (c_perc->parsed()) return cmd_percolate(opt);
    if (c_strong->parsed()) return cmd_strong(opt, all_starts, start_coset);
    if (c_search->parsed()) return cmd_search(opt, mode, start_pair);
    if (c_exp->parsed()) return cmd_exponent(opt);
    if (c_audit->parsed()) return cmd_audit(opt, audit_budget);
    if (c_hom->parsed()) return cmd_homcheck(opt, hom_trials);
    if (c_cat->parsed()) return cmd_catalog(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
