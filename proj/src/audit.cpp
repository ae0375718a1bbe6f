#include "coxperc/audit.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

namespace coxperc {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 eng_;
};

void record_failure(AuditLaw& law, const std::string& what) {
  ++law.failures;
  if (law.first_failure.empty()) law.first_failure = what;
}

std::string word_str(const Group& g, int w) {
  std::string out;
  for (int letter : g.word_of(w)) {
    if (!out.empty()) out += ".";
    out += g.system().generators[letter];
  }
  return out.empty() ? "e" : out;
}

// parity: ell(tw) - ell(w) is odd for t in T.
AuditLaw law_parity(const Group& g, long long budget, Rng& rng) {
  AuditLaw law{"parity", false, 0, 0, {}};
  const auto& T = g.reflections();
  const long long full = static_cast<long long>(T.size()) * g.order();
  law.exhaustive = full <= budget;
  auto check = [&](const Reflection& t, int w) {
    ++law.checked;
    int tw = g.apply_word(w, t.element.word);
    if ((g.length(tw) - g.length(w)) % 2 == 0)
      record_failure(law, "t=" + word_str(g, t.element.index) + " w=" + word_str(g, w));
  };
  if (law.exhaustive) {
    for (const auto& t : T)
      for (int w = 0; w < g.order(); ++w) check(t, w);
  } else {
    for (long long i = 0; i < budget; ++i)
      check(T[rng.below(static_cast<int>(T.size()))], rng.below(g.order()));
  }
  return law;
}

// strong exchange: ell(tw) < ell(w) implies tw is w with one letter deleted.
AuditLaw law_strong_exchange(const Group& g, long long budget, Rng& rng) {
  AuditLaw law{"strong-exchange", false, 0, 0, {}};
  const auto& T = g.reflections();
  const long long full = static_cast<long long>(T.size()) * g.order();
  law.exhaustive = full <= budget;
  auto check = [&](const Reflection& t, int w) {
    ++law.checked;
    int tw = g.apply_word(w, t.element.word);
    if (g.length(tw) >= g.length(w)) return;
    auto word = g.word_of(w);
    for (size_t i = 0; i < word.size(); ++i) {
      std::vector<int> cut;
      cut.reserve(word.size() - 1);
      for (size_t k = 0; k < word.size(); ++k)
        if (k != i) cut.push_back(word[k]);
      if (g.from_word(cut) == tw) return;
    }
    record_failure(law, "t=" + word_str(g, t.element.index) + " w=" + word_str(g, w));
  };
  if (law.exhaustive) {
    for (const auto& t : T)
      for (int w = 0; w < g.order(); ++w) check(t, w);
  } else {
    for (long long i = 0; i < budget; ++i)
      check(T[rng.below(static_cast<int>(T.size()))], rng.below(g.order()));
  }
  return law;
}

// deletion: an unreduced word equals itself with two letters deleted.
AuditLaw law_deletion(const Group& g, long long budget, Rng& rng) {
  AuditLaw law{"deletion", false, 0, 0, {}};
  const int n = g.rank();
  const int maxlen = g.table().max_depth() + 1;
  auto check = [&](const std::vector<int>& word) {
    ++law.checked;
    int w = g.from_word(word);
    if (g.length(w) >= static_cast<int>(word.size())) return;
    for (size_t i = 0; i < word.size(); ++i)
      for (size_t j = i + 1; j < word.size(); ++j) {
        std::vector<int> cut;
        cut.reserve(word.size() - 2);
        for (size_t k = 0; k < word.size(); ++k)
          if (k != i && k != j) cut.push_back(word[k]);
        if (g.from_word(cut) == w) return;
      }
    std::string s;
    for (int letter : word) s += g.system().generators[letter] + ".";
    record_failure(law, "word " + s);
  };
  // all words up to maxlen when that fits the budget, else random words
  long long total = 0, p = 1;
  for (int len = 1; len <= maxlen && total <= budget; ++len) {
    p *= n;
    total += p;
  }
  law.exhaustive = total <= budget;
  if (law.exhaustive) {
    std::vector<int> word;
    auto rec = [&](auto&& self, int len) -> void {
      if (len == 0) {
        check(word);
        return;
      }
      for (int gidx = 0; gidx < n; ++gidx) {
        word.push_back(gidx);
        self(self, len - 1);
        word.pop_back();
      }
    };
    for (int len = 1; len <= maxlen; ++len) rec(rec, len);
  } else {
    for (long long i = 0; i < budget; ++i) {
      int len = 2 + rng.below(maxlen + 1);
      std::vector<int> word(len);
      for (auto& letter : word) letter = rng.below(n);
      check(word);
    }
  }
  return law;
}

// lifting: u < w and s in D_L(w) \ D_L(u) gives u <= sw and su <= w.
AuditLaw law_lifting(const Group& g, long long budget, Rng& rng) {
  AuditLaw law{"lifting", false, 0, 0, {}};
  auto check = [&](int u, int w) {
    ++law.checked;
    if (!(u != w && g.bruhat_leq(u, w))) return;
    for (int s = 0; s < g.rank(); ++s) {
      if (!g.is_left_descent(w, s) || g.is_left_descent(u, s)) continue;
      if (!g.bruhat_leq(u, g.act(w, s)) || !g.bruhat_leq(g.act(u, s), w))
        record_failure(law, "u=" + word_str(g, u) + " w=" + word_str(g, w) + " s=" +
                                g.system().generators[s]);
    }
  };
  const long long full = static_cast<long long>(g.order()) * g.order();
  law.exhaustive = full <= budget;
  if (law.exhaustive) {
    for (int u = 0; u < g.order(); ++u)
      for (int w = 0; w < g.order(); ++w) check(u, w);
  } else {
    for (long long i = 0; i < budget; ++i) check(rng.below(g.order()), rng.below(g.order()));
  }
  return law;
}

std::vector<std::vector<int>> audit_subsets(const Group& g, Rng& rng) {
  const int n = g.rank();
  std::vector<std::vector<int>> subsets;
  if (n <= 4) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s.push_back(i);
      subsets.push_back(std::move(s));
    }
  } else {
    subsets.push_back({});
    for (int i = 0; i < n; ++i) subsets.push_back({i});
    for (int k = 0; k < 8; ++k) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (rng.below(2)) s.push_back(i);
      subsets.push_back(std::move(s));
    }
  }
  return subsets;
}

// order-preserving projection: w <= u implies w^I <= u^I.
AuditLaw law_order_preserving(const Group& g, long long budget, Rng& rng) {
  AuditLaw law{"order-preserving-projection", false, 0, 0, {}};
  QuotientCache cache(g);
  auto subsets = audit_subsets(g, rng);
  auto check = [&](const std::vector<int>& I, int w, int u) {
    ++law.checked;
    if (!g.bruhat_leq(w, u)) return;
    const auto& q = cache.table(I);
    int pw = g.from_word(min_rep_word(q, q.apply_word(0, g.word_of(w))));
    int pu = g.from_word(min_rep_word(q, q.apply_word(0, g.word_of(u))));
    if (!g.bruhat_leq(pw, pu))
      record_failure(law, "I=" + subset_to_string(g.system(), I) + " w=" + word_str(g, w) +
                              " u=" + word_str(g, u));
  };
  const long long full =
      static_cast<long long>(subsets.size()) * g.order() * g.order();
  law.exhaustive = full <= budget;
  if (law.exhaustive) {
    for (const auto& I : subsets)
      for (int w = 0; w < g.order(); ++w)
        for (int u = 0; u < g.order(); ++u) check(I, w, u);
  } else {
    for (long long i = 0; i < budget; ++i)
      check(subsets[rng.below(static_cast<int>(subsets.size()))], rng.below(g.order()),
            rng.below(g.order()));
  }
  return law;
}

// chain property in W^I: u < w admits a covering chain inside W^I.
AuditLaw law_chain(const Group& g, long long budget, Rng& rng) {
  AuditLaw law{"quotient-chain", false, 0, 0, {}};
  QuotientCache cache(g);
  auto subsets = audit_subsets(g, rng);
  auto check = [&](const std::vector<int>& I, int cu, int cw) {
    ++law.checked;
    const auto& q = cache.table(I);
    if (cu >= q.size() || cw >= q.size()) return;
    int u = g.from_word(min_rep_word(q, cu));
    int w = g.from_word(min_rep_word(q, cw));
    if (u == w || !g.bruhat_leq(u, w)) return;
    // descend one length at a time through quotient representatives
    int cur = w;
    while (g.length(cur) > g.length(u)) {
      int next = -1;
      for (int c = 0; c < q.size(); ++c) {
        if (q.depth[c] != g.length(cur) - 1) continue;
        int x = g.from_word(min_rep_word(q, c));
        if (g.bruhat_leq(u, x) && g.bruhat_leq(x, cur)) {
          next = x;
          break;
        }
      }
      if (next < 0) {
        record_failure(law, "I=" + subset_to_string(g.system(), I) + " u=" + word_str(g, u) +
                                " w=" + word_str(g, w));
        return;
      }
      cur = next;
    }
    if (cur != u)
      record_failure(law, "I=" + subset_to_string(g.system(), I) + " u=" + word_str(g, u) +
                              " w=" + word_str(g, w));
  };
  long long full = 0;
  for (const auto& I : subsets) {
    long long qn = cache.table(I).size();
    full += qn * qn;
  }
  law.exhaustive = full <= budget;
  if (law.exhaustive) {
    for (const auto& I : subsets) {
      int qn = cache.table(I).size();
      for (int cu = 0; cu < qn; ++cu)
        for (int cw = 0; cw < qn; ++cw) check(I, cu, cw);
    }
  } else {
    for (long long i = 0; i < budget; ++i) {
      const auto& I = subsets[rng.below(static_cast<int>(subsets.size()))];
      int qn = cache.table(I).size();
      check(I, rng.below(qn), rng.below(qn));
    }
  }
  return law;
}

// bruhat_leq against the set of subword products of a fixed reduced word.
AuditLaw law_subword(const Group& g, long long budget, Rng& rng) {
  AuditLaw law{"subword-vs-bruhat", false, 0, 0, {}};
  std::vector<std::vector<char>> downsets(g.order());
  auto downset = [&](int w) -> const std::vector<char>& {
    auto& d = downsets[w];
    if (d.empty()) {
      d.assign(g.order(), 0);
      d[0] = 1;
      for (int letter : g.word_of(w)) {
        const auto& rm = g.right_mult_table(letter);
        std::vector<char> next = d;
        for (int u = 0; u < g.order(); ++u)
          if (d[u]) next[rm[u]] = 1;
        d = std::move(next);
      }
    }
    return d;
  };
  auto check = [&](int u, int w) {
    ++law.checked;
    if (g.bruhat_leq(u, w) != static_cast<bool>(downset(w)[u]))
      record_failure(law, "u=" + word_str(g, u) + " w=" + word_str(g, w));
  };
  const long long full = static_cast<long long>(g.order()) * g.order();
  law.exhaustive = full <= budget;
  if (law.exhaustive) {
    for (int w = 0; w < g.order(); ++w)
      for (int u = 0; u < g.order(); ++u) check(u, w);
  } else {
    for (long long i = 0; i < budget; ++i) check(rng.below(g.order()), rng.below(g.order()));
  }
  return law;
}

// factorization: w = w^I w_I, lengths add, parts land where they should.
AuditLaw law_factorization(const Group& g, long long budget, Rng& rng) {
  AuditLaw law{"factorization", false, 0, 0, {}};
  QuotientCache cache(g);
  auto subsets = audit_subsets(g, rng);
  auto check = [&](const std::vector<int>& I, int w) {
    ++law.checked;
    const auto& q = cache.table(I);
    auto f = factorize(g, q, w);
    bool ok = g.mult(f.quotient_part.index, f.parabolic_part.index) == w;
    ok = ok && f.quotient_part.word.size() + f.parabolic_part.word.size() ==
                   static_cast<size_t>(g.length(w));
    for (int letter : f.parabolic_part.word)
      ok = ok && std::binary_search(I.begin(), I.end(), letter);
    // the quotient part is the minimal representative of its own coset
    int c = q.apply_word(0, f.quotient_part.word);
    ok = ok && q.depth[c] == static_cast<int>(f.quotient_part.word.size());
    if (!ok)
      record_failure(law, "I=" + subset_to_string(g.system(), I) + " w=" + word_str(g, w));
  };
  const long long full = static_cast<long long>(subsets.size()) * g.order();
  law.exhaustive = full <= budget;
  if (law.exhaustive) {
    for (const auto& I : subsets)
      for (int w = 0; w < g.order(); ++w) check(I, w);
  } else {
    for (long long i = 0; i < budget; ++i)
      check(subsets[rng.below(static_cast<int>(subsets.size()))], rng.below(g.order()));
  }
  return law;
}

}  // namespace

AuditReport axiom_audit(const Group& g, long long budget, std::uint64_t seed) {
  AuditReport report;
  report.system_name = g.system().name;
  report.budget = budget;
  report.seed = seed;
  Rng rng(seed);
  report.laws.push_back(law_parity(g, budget, rng));
  report.laws.push_back(law_strong_exchange(g, budget, rng));
  report.laws.push_back(law_deletion(g, budget, rng));
  report.laws.push_back(law_lifting(g, budget, rng));
  report.laws.push_back(law_order_preserving(g, budget, rng));
  report.laws.push_back(law_chain(g, budget, rng));
  report.laws.push_back(law_subword(g, budget, rng));
  report.laws.push_back(law_factorization(g, budget, rng));
  return report;
}

std::string to_text(const AuditReport& report) {
  std::ostringstream out;
  out << "audit " << report.system_name << " (budget " << report.budget << ", seed "
      << report.seed << ")\n";
  for (const auto& law : report.laws) {
    out << "  " << (law.failures ? "FAIL" : "pass") << "  " << law.name << "  checked "
        << law.checked << (law.exhaustive ? " (exhaustive)" : " (sampled)");
    if (law.failures) out << "  failures " << law.failures << "  first: " << law.first_failure;
    out << "\n";
  }
  return out.str();
}

std::string to_json_text(const AuditReport& report) {
  nlohmann::json j;
  j["system"] = report.system_name;
  j["budget"] = report.budget;
  j["seed"] = report.seed;
  j["allPass"] = report.all_pass();
  j["laws"] = nlohmann::json::array();
  for (const auto& law : report.laws) {
    nlohmann::json l;
    l["name"] = law.name;
    l["exhaustive"] = law.exhaustive;
    l["checked"] = law.checked;
    l["failures"] = law.failures;
    if (law.failures) l["firstFailure"] = law.first_failure;
    j["laws"].push_back(l);
  }
  return j.dump(2) + "\n";
}

}  // namespace coxperc
