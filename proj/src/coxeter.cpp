#include "coxperc/coxeter.hpp"

#include "coxperc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace coxperc {

CoxeterSystem validate_system(std::string name, std::vector<std::string> labels,
                              std::vector<std::vector<int>> matrix) {
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(matrix.size()) != n)
    fail(Errc::bad_input, "matrix size does not match generator count");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n)
      fail(Errc::bad_input, "matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (matrix[i][j] != matrix[j][i])
        fail(Errc::asymmetric_matrix, "m[" + std::to_string(i) + "][" + std::to_string(j) +
                                          "] != m[" + std::to_string(j) + "][" +
                                          std::to_string(i) + "]");
  for (int i = 0; i < n; ++i)
    if (matrix[i][i] != 1) fail(Errc::bad_diagonal, "m[i][i] must be 1");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && matrix[i][j] < 2)
        fail(Errc::entry_below_2, "off-diagonal entries must be >= 2");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) fail(Errc::duplicate_label, "label '" + labels[i] + "'");
  return CoxeterSystem{std::move(name), std::move(labels), std::move(matrix)};
}

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back("s" + std::to_string(i));
  return out;
}

std::vector<std::vector<int>> commuting_matrix(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void set_bond(std::vector<std::vector<int>>& m, int i, int j, int v) {
  m[i][j] = v;
  m[j][i] = v;
}

CoxeterSystem built_in_single(const std::string& name) {
  auto make = [&](int n, auto&& edges) {
    auto m = commuting_matrix(n);
    edges(m);
    return validate_system(name, default_labels(n), std::move(m));
  };
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'D')) {
    int n = 0;
    try {
      n = std::stoi(name.substr(1));
    } catch (...) {
      fail(Errc::bad_input, "unknown system '" + name + "'");
    }
    if (name[0] == 'A') {
      if (n < 1) fail(Errc::bad_input, "An needs n >= 1");
      return make(n, [&](auto& m) {
        for (int i = 0; i + 1 < n; ++i) set_bond(m, i, i + 1, 3);
      });
    }
    if (name[0] == 'B') {
      if (n < 2) fail(Errc::bad_input, "Bn needs n >= 2");
      return make(n, [&](auto& m) {
        for (int i = 0; i + 2 < n; ++i) set_bond(m, i, i + 1, 3);
        set_bond(m, n - 2, n - 1, 4);
      });
    }
    if (n < 3) fail(Errc::bad_input, "Dn needs n >= 3");
    return make(n, [&](auto& m) {
      for (int i = 0; i + 1 < n - 2; ++i) set_bond(m, i, i + 1, 3);
      set_bond(m, n - 3, n - 2, 3);
      set_bond(m, n - 3, n - 1, 3);
    });
  }
  if (name == "F4")
    return make(4, [](auto& m) {
      set_bond(m, 0, 1, 3);
      set_bond(m, 1, 2, 4);
      set_bond(m, 2, 3, 3);
    });
  if (name == "H3")
    return make(3, [](auto& m) {
      set_bond(m, 0, 1, 5);
      set_bond(m, 1, 2, 3);
    });
  if (name.rfind("I2(", 0) == 0 && name.back() == ')') {
    int m12 = 0;
    try {
      m12 = std::stoi(name.substr(3, name.size() - 4));
    } catch (...) {
      fail(Errc::bad_input, "unknown system '" + name + "'");
    }
    if (m12 < 2) fail(Errc::bad_input, "I2(m) needs m >= 2");
    return make(2, [&](auto& m) { set_bond(m, 0, 1, m12); });
  }
  fail(Errc::bad_input, "unknown system '" + name + "'");
}

}  // namespace

CoxeterSystem direct_product(const CoxeterSystem& a, const CoxeterSystem& b) {
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  const int n = a.rank() + b.rank();
  auto m = commuting_matrix(n);
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) m[i][j] = a.matrix[i][j];
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) m[a.rank() + i][a.rank() + j] = b.matrix[i][j];
  std::string name = a.name.empty() ? b.name : (b.name.empty() ? a.name : a.name + "x" + b.name);
  return validate_system(std::move(name), default_labels(n), std::move(m));
}

CoxeterSystem built_in_system(const std::string& name) {
  // split on 'x'; none of the built-in tokens contains one
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : name) {
    if (ch == 'x') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  tokens.push_back(cur);
  CoxeterSystem sys = built_in_single(tokens[0]);
  for (size_t i = 1; i < tokens.size(); ++i) sys = direct_product(sys, built_in_single(tokens[i]));
  sys.name = name;
  return sys;
}

CoxeterSystem system_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::bad_input, std::string("invalid JSON: ") + e.what());
  }
  if (!j.contains("generators") || !j.contains("matrix"))
    fail(Errc::bad_input, "system document needs 'generators' and 'matrix'");
  std::string name = j.value("name", std::string("custom"));
  std::vector<std::string> labels = j["generators"].get<std::vector<std::string>>();
  std::vector<std::vector<int>> matrix = j["matrix"].get<std::vector<std::vector<int>>>();
  return validate_system(std::move(name), std::move(labels), std::move(matrix));
}

CoxeterSystem system_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::bad_input, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return system_from_json_text(buf.str());
}

std::vector<int> parse_subset(const CoxeterSystem& sys, const std::string& csv) {
  std::vector<int> out;
  if (csv.empty() || csv == "-") return out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto it = std::find(sys.generators.begin(), sys.generators.end(), tok);
    if (it == sys.generators.end())
      fail(Errc::bad_subset, "unknown generator '" + tok + "' in system " + sys.name);
    out.push_back(static_cast<int>(it - sys.generators.begin()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string subset_to_string(const CoxeterSystem& sys, const std::vector<int>& subset) {
  std::string out;
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) out += " ";
    out += sys.generators[subset[i]];
  }
  return out;
}

}  // namespace coxperc
