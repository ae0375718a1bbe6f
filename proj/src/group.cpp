#include "coxperc/group.hpp"

#include "coxperc/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxperc {

Group::Group(CoxeterSystem sys, long cap)
    : sys_(std::move(sys)), reg_(enumerate_cosets(sys_, {}, cap)) {
  rmult_.resize(sys_.rank());
}

int Group::mult(int u, int w) const {
  auto uw = word_of(u);
  return reg_.apply_word(w, uw);
}

int Group::inverse(int w) const {
  auto ww = word_of(w);
  std::reverse(ww.begin(), ww.end());
  return reg_.apply_word(0, ww);
}

std::vector<int> Group::support(int w) const {
  auto ww = word_of(w);
  std::sort(ww.begin(), ww.end());
  ww.erase(std::unique(ww.begin(), ww.end()), ww.end());
  return ww;
}

std::vector<int> Group::left_descents(int w) const {
  std::vector<int> out;
  for (int g = 0; g < rank(); ++g)
    if (is_left_descent(w, g)) out.push_back(g);
  return out;
}

std::vector<int> Group::right_descents(int w) const { return left_descents(inverse(w)); }

bool Group::bruhat_leq(int u, int w) const {
  while (true) {
    if (u == 0) return true;
    if (length(u) > length(w)) return false;
    int s = -1;
    for (int g = 0; g < rank(); ++g)
      if (is_left_descent(w, g)) {
        s = g;
        break;
      }
    int su = act(u, s);
    if (length(su) < length(u)) u = su;
    w = act(w, s);
  }
}

const std::vector<Reflection>& Group::reflections() const {
  if (!refl_done_) {
    std::vector<char> seen(order(), 0);
    std::vector<int> found;
    for (int w = 0; w < order(); ++w) {
      int wi = inverse(w);
      for (int g = 0; g < rank(); ++g) {
        int t = mult(w, act(wi, g));  // w * s_g * w^{-1}
        if (!seen[t]) {
          seen[t] = 1;
          found.push_back(t);
        }
      }
    }
    refl_.reserve(found.size());
    for (int t : found) {
      Reflection r;
      r.element = element(t);
      r.support = support(t);
      if (r.length() % 2 == 0 || mult(t, t) != 0)
        throw std::logic_error("conjugate of a generator is not an odd involution");
      refl_.push_back(std::move(r));
    }
    std::sort(refl_.begin(), refl_.end(), [](const Reflection& a, const Reflection& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.element.word < b.element.word;
    });
    refl_done_ = true;
  }
  return refl_;
}

const std::vector<int>& Group::right_mult_table(int g) const {
  if (g < 0 || g >= rank()) fail(Errc::bad_index, "generator index out of range");
  auto& rm = rmult_[g];
  if (rm.empty()) {
    rm.resize(order());
    rm[0] = act(0, g);
    // BFS numbering is depth-monotone: peel the parent letter a of w, so that
    // w * s_g = a * (w' * s_g) with w' already filled in.
    for (int w = 1; w < order(); ++w) {
      int a = reg_.parent_gen[w];
      int wp = act(w, a);
      rm[w] = act(rm[wp], a);
    }
  }
  return rm;
}

const CosetTable& QuotientCache::table(const std::vector<int>& subset) const {
  std::uint64_t key = 0;
  for (int g : subset) {
    if (g < 0 || g >= 64) fail(Errc::bad_subset, "subset index out of range");
    key |= std::uint64_t(1) << g;
  }
  auto it = memo_.find(key);
  if (it == memo_.end())
    it = memo_.emplace(key, enumerate_cosets(g_->system(), subset, g_->order())).first;
  return it->second;
}

Factorization factorize(const Group& g, const CosetTable& quotient, int w) {
  auto ww = g.word_of(w);
  int coset = quotient.apply_word(0, ww);
  auto uw = min_rep_word(quotient, coset);
  int u = g.from_word(uw);
  int wi = g.mult(g.inverse(u), w);
  if (g.length(u) + g.length(wi) != g.length(w))
    throw std::logic_error("factorization lengths do not add");
  return {g.element(u), g.element(wi)};
}

std::pair<std::vector<int>, std::vector<int>> descent_sets(const Group& g, int w) {
  return {g.left_descents(w), g.right_descents(w)};
}

}  // namespace coxperc
