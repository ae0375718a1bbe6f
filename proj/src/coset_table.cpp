#include "coxperc/coset_table.hpp"

#include "coxperc/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace coxperc {

namespace {

// HLT-style Todd-Coxeter with a union-find coincidence queue. Merges always
// keep the smaller index alive, so coset 0 (the subgroup itself) never dies.
class Enumerator {
 public:
  Enumerator(const CoxeterSystem& sys, const std::vector<int>& subgroup, long cap)
      : n_(sys.rank()), cap_(cap), alloc_cap_(4 * cap + 1024) {
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) {
        std::vector<int> rel;
        rel.reserve(2 * sys.bond(i, j));
        for (int k = 0; k < sys.bond(i, j); ++k) {
          rel.push_back(i);
          rel.push_back(j);
        }
        relators_.push_back(std::move(rel));
      }
    new_row();
    for (int g : subgroup) slot(0, g) = 0;
  }

  void run() {
    for (int c = 0; c < row_count(); ++c) {
      if (p_[c] != c) continue;
      for (const auto& rel : relators_) {
        scan_and_fill(c, rel);
        if (p_[c] != c) break;
      }
    }
  }

  int live() const { return live_; }
  int row_count() const { return static_cast<int>(p_.size()); }

  int rep(int c) {
    while (p_[c] != c) {
      p_[c] = p_[p_[c]];
      c = p_[c];
    }
    return c;
  }

  int neighbor(int c, int g) {
    int d = slot(c, g);
    return d < 0 ? -1 : rep(d);
  }

 private:
  int& slot(int c, int g) { return tab_[static_cast<size_t>(c) * n_ + g]; }

  // Live count may transiently exceed the final size before coincidences
  // merge duplicates; the allocation bound catches runaway (non-finite)
  // inputs, and the result size is checked against the cap after the run.
  void new_row() {
    if (row_count() >= alloc_cap_) fail(Errc::cap_exceeded, "coset table allocation cap");
    tab_.resize(tab_.size() + n_, -1);
    p_.push_back(row_count());
    ++live_;
  }

  int define(int c, int g) {
    int d = row_count();
    new_row();
    slot(c, g) = d;
    slot(d, g) = c;
    return d;
  }

  void merge(int a, int b, std::deque<int>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    --live_;
    q.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int d = q.front();
      q.pop_front();
      for (int g = 0; g < n_; ++g) {
        int e = slot(d, g);
        if (e < 0) continue;
        slot(d, g) = -1;
        if (slot(e, g) == d) slot(e, g) = -1;
        int u = rep(d), v = rep(e);
        if (slot(u, g) >= 0) {
          merge(v, slot(u, g), q);
        } else if (slot(v, g) >= 0) {
          merge(u, slot(v, g), q);
        } else {
          slot(u, g) = v;
          slot(v, g) = u;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int i = 0, j = static_cast<int>(w.size()) - 1;
    int f = c, b = c;
    while (true) {
      while (i <= j) {
        int d = neighbor(f, w[i]);
        if (d < 0) break;
        f = d;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        int d = neighbor(b, w[j]);  // generators are their own inverses
        if (d < 0) break;
        b = d;
        --j;
      }
      if (j < i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i) {
        slot(f, w[i]) = b;
        slot(b, w[i]) = f;
        return;
      }
      f = define(f, w[i]);
      ++i;
    }
  }

  int n_;
  long cap_;
  long alloc_cap_;
  int live_ = 0;
  std::vector<std::vector<int>> relators_;
  std::vector<int> tab_;
  std::vector<int> p_;
};

}  // namespace

CosetTable enumerate_cosets(const CoxeterSystem& sys, std::vector<int> subgroup, long cap) {
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  for (int g : subgroup)
    if (g < 0 || g >= sys.rank()) fail(Errc::bad_subset, "generator index out of range");
  if (cap < 1) fail(Errc::bad_input, "cap must be positive");

  CosetTable out;
  out.ngens = sys.rank();
  out.subgroup = subgroup;

  if (sys.rank() == 0) {
    out.ncosets = 1;
    out.depth = {0};
    out.parent_gen = {-1};
    out.complete = true;
    return out;
  }

  Enumerator en(sys, subgroup, cap);
  en.run();
  if (en.live() > cap) fail(Errc::cap_exceeded, "quotient has more than cap cosets");

  // BFS renumbering from coset 0, children in generator order.
  const int n = sys.rank();
  const int live = en.live();
  std::vector<int> id(en.row_count(), -1);
  std::vector<int> order;
  order.reserve(live);
  id[en.rep(0)] = 0;
  order.push_back(en.rep(0));
  out.depth.assign(live, 0);
  out.parent_gen.assign(live, -1);
  for (size_t k = 0; k < order.size(); ++k) {
    int c = order[k];
    for (int g = 0; g < n; ++g) {
      int d = en.neighbor(c, g);
      if (d < 0) throw std::logic_error("incomplete coset table after enumeration");
      if (id[d] < 0) {
        id[d] = static_cast<int>(order.size());
        out.depth[id[d]] = out.depth[id[c]] + 1;
        out.parent_gen[id[d]] = g;
        order.push_back(d);
      }
    }
  }
  if (static_cast<int>(order.size()) != live)
    throw std::logic_error("coset table action graph is not connected");

  out.ncosets = live;
  out.action.assign(static_cast<size_t>(live) * n, -1);
  for (int k = 0; k < live; ++k) {
    int c = order[k];
    for (int g = 0; g < n; ++g) out.action[static_cast<size_t>(k) * n + g] = id[en.neighbor(c, g)];
  }
  out.complete = true;
  return out;
}

std::vector<int> min_rep_word(const CosetTable& table, int coset) {
  if (coset < 0 || coset >= table.size()) fail(Errc::bad_index, "coset index out of range");
  std::vector<int> word;
  word.reserve(table.depth[coset]);
  int c = coset;
  while (table.depth[c] > 0) {
    for (int g = 0; g < table.ngens; ++g) {
      int d = table.act(c, g);
      if (table.depth[d] == table.depth[c] - 1) {
        word.push_back(g);
        c = d;
        break;
      }
    }
  }
  return word;
}

}  // namespace coxperc
