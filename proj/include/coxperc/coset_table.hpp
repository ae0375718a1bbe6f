#pragma once

#include "coxperc/coxeter.hpp"

#include <span>
#include <vector>

namespace coxperc {

inline constexpr long kDefaultCosetCap = 1'000'000;

// Action table of the simple generators on the left cosets W/W_I, in canonical
// BFS numbering: coset 0 is W_I, children are explored in generator order, so
// identical inputs produce bit-identical tables. act(c, g) is the coset of
// s_g * c (left multiplication); every column is an involution.
//
// Words are "little-endian as applied to the identity coset": the word
// [a, b] denotes the element s_a * s_b, so applying it to a coset multiplies
// by the letters right to left (s_b first). depth[c] is the distance from
// coset 0, which equals the length of the coset's minimal representative.
struct CosetTable {
  int ngens = 0;
  int ncosets = 0;
  std::vector<int> subgroup;    // sorted generator indices I
  std::vector<int> action;      // ncosets * ngens
  std::vector<int> depth;       // BFS distance from coset 0
  std::vector<int> parent_gen;  // generator that discovered the coset; -1 at 0
  bool complete = false;

  int size() const { return ncosets; }
  int act(int c, int g) const { return action[static_cast<size_t>(c) * ngens + g]; }
  int apply_word(int c, std::span<const int> word) const {
    for (size_t i = word.size(); i-- > 0;) c = act(c, word[i]);
    return c;
  }
  int max_depth() const { return ncosets ? depth.back() : 0; }

  bool operator==(const CosetTable&) const = default;
};

// Coset enumeration over the presentation (relators (s_i s_j)^{m_ij}, i <= j)
// with coincidence processing, followed by a BFS renumbering pass. Throws
// CAP_EXCEEDED when the quotient does not close within `cap` cosets.
CosetTable enumerate_cosets(const CoxeterSystem& sys, std::vector<int> subgroup,
                            long cap = kDefaultCosetCap);

// Lexicographically smallest reduced word of the coset's minimal-length
// representative; applying it to coset 0 returns the coset.
std::vector<int> min_rep_word(const CosetTable& table, int coset);

}  // namespace coxperc
