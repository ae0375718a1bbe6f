#include "coxperc/catalog.hpp"

#include "coxperc/errors.hpp"
#include "coxperc/percolation.hpp"

#include <json.hpp>

#include <sstream>

namespace coxperc {

std::vector<std::string> small_builtin_roster() {
  return {"A1",    "A2",    "A3",    "A4",    "A5",    "B2",       "B3", "B4",
          "D4",    "F4",    "H3",    "I2(5)", "I2(6)", "I2(7)",    "I2(8)", "A2xI2(2)"};
}

namespace {

std::string strong_status(const Group& g, const CosetTable& quotient) {
  int total = quotient.size() - 1;
  int ok = 0;
  for (int w = 1; w < quotient.size(); ++w)
    if (build_strong_percolating_sequence(g, quotient, w).verified) ++ok;
  return std::to_string(ok) + "/" + std::to_string(total);
}

}  // namespace

std::vector<CatalogRow> run_catalog(const CatalogOptions& options) {
  std::vector<CatalogRow> rows;
  auto names = options.systems.empty() ? small_builtin_roster() : options.systems;
  for (const auto& name : names) {
    auto sys = built_in_system(name);
    const int n = sys.rank();
    if (n < 2) continue;  // no distinct codimension-one pairs
    Group g(sys, options.coset_cap);
    QuotientCache cache(g);

    std::vector<std::vector<int>> codim1(n);
    std::vector<std::string> strong(n);
    for (int omit = 0; omit < n; ++omit) {
      for (int k = 0; k < n; ++k)
        if (k != omit) codim1[omit].push_back(k);
      strong[omit] = strong_status(g, cache.table(codim1[omit]));
    }

    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CatalogRow row;
        row.system = name;
        row.rank = n;
        row.subset_i = subset_to_string(sys, codim1[i]);
        row.subset_j = subset_to_string(sys, codim1[j]);
        auto graph = build_incidence_graph(sys, {codim1[i], codim1[j]}, options.coset_cap);
        row.report = extremal_exponent(graph);
        row.strong_i = strong[i];
        row.strong_j = strong[j];
        row.balanced_identity_ok = true;
        if (row.report.part_a == row.report.part_b) {
          auto bal = balanced_exponent(row.report.v, row.report.deg_a);
          row.balanced_identity_ok =
              bal.c == row.report.c &&
              (bal.gap == 0) == row.report.is_complete_bipartite &&
              bal.gap == row.report.c - Rational(1, row.report.furedi_r);
        }
        rows.push_back(std::move(row));
      }
  }
  return rows;
}

std::string catalog_csv(const std::vector<CatalogRow>& rows) {
  std::ostringstream out;
  out << "name,rank,I,J,vA,vB,e,dI,dJ,c,exponent,furediExponent,beatsFuredi,verdict,"
         "strongI,strongJ,note\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << row.system << "," << row.rank << "," << row.subset_i << "," << row.subset_j << ","
        << r.part_a << "," << r.part_b << "," << r.e << "," << r.deg_a << "," << r.deg_b << ","
        << frac_str(r.c) << "," << frac_str(r.exponent) << "," << frac_str(r.furedi_exponent)
        << "," << (r.beats_furedi ? "true" : "false") << "," << verdict_name(r.verdict) << ","
        << row.strong_i << "," << row.strong_j << ",";
    // the note may contain commas; keep the CSV single-token
    std::string note = r.note;
    for (auto& ch : note)
      if (ch == ',') ch = ';';
    out << note << "\n";
  }
  return out.str();
}

std::string catalog_json(const std::vector<CatalogRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["name"] = row.system;
    r["rank"] = row.rank;
    r["I"] = row.subset_i;
    r["J"] = row.subset_j;
    r["report"] = nlohmann::json::parse(to_json_text(row.report));
    r["strongI"] = row.strong_i;
    r["strongJ"] = row.strong_j;
    j.push_back(r);
  }
  return j.dump(2) + "\n";
}

}  // namespace coxperc
