#pragma once

#include "coxperc/coset_table.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace coxperc {

struct GroupElement {
  int index = 0;
  std::vector<int> word;  // a reduced word; length equals the element length
};

struct Reflection {
  GroupElement element;
  std::vector<int> support;  // sorted generator indices occurring in reduced words
  int length() const { return static_cast<int>(element.word.size()); }
};

// The fully enumerated group: the regular coset table (I = empty) plus element
// arithmetic, Bruhat order and the reflection set T. Queries on a built Group
// are read-only apart from internal memoization.
class Group {
 public:
  explicit Group(CoxeterSystem sys, long cap = kDefaultCosetCap);

  const CoxeterSystem& system() const { return sys_; }
  const CosetTable& table() const { return reg_; }
  int rank() const { return sys_.rank(); }
  int order() const { return reg_.size(); }

  int length(int w) const { return reg_.depth[w]; }
  int act(int w, int g) const { return reg_.act(w, g); }  // s_g * w
  int apply_word(int w, std::span<const int> word) const { return reg_.apply_word(w, word); }
  int from_word(std::span<const int> word) const { return reg_.apply_word(0, word); }
  std::vector<int> word_of(int w) const { return min_rep_word(reg_, w); }
  GroupElement element(int index) const { return {index, word_of(index)}; }

  int mult(int u, int w) const;       // u * w
  int inverse(int w) const;
  int conjugate_by(int w, int x) const {  // w * x * w^{-1}
    return mult(w, mult(x, inverse(w)));
  }

  std::vector<int> support(int w) const;
  std::vector<int> left_descents(int w) const;
  std::vector<int> right_descents(int w) const;
  bool is_left_descent(int w, int g) const { return reg_.depth[act(w, g)] < reg_.depth[w]; }

  // Bruhat order via the lifting recursion; agrees with the subword property.
  bool bruhat_leq(int u, int w) const;

  // All of T = {w s w^{-1}}, deduplicated and sorted by (length, word).
  const std::vector<Reflection>& reflections() const;

  // w -> w * s_g, built once per generator.
  const std::vector<int>& right_mult_table(int g) const;

  int longest_element() const { return order() - 1; }

 private:
  CoxeterSystem sys_;
  CosetTable reg_;
  mutable std::vector<Reflection> refl_;
  mutable bool refl_done_ = false;
  mutable std::vector<std::vector<int>> rmult_;
};

// Memoized quotient tables for one group, keyed by subset.
class QuotientCache {
 public:
  explicit QuotientCache(const Group& g) : g_(&g) {}
  const CosetTable& table(const std::vector<int>& subset) const;
  const Group& group() const { return *g_; }

 private:
  const Group* g_;
  mutable std::map<std::uint64_t, CosetTable> memo_;
};

struct Factorization {
  GroupElement quotient_part;   // w^I, the minimal coset representative
  GroupElement parabolic_part;  // w_I in W_I
};

// Unique factorization w = w^I * w_I with additive lengths.
Factorization factorize(const Group& g, const CosetTable& quotient, int w);

// (D_L, D_R) as sorted generator index lists.
std::pair<std::vector<int>, std::vector<int>> descent_sets(const Group& g, int w);

}  // namespace coxperc
