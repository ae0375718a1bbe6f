#pragma once

#include "coxperc/incidence.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coxperc {

using CosetSet = boost::dynamic_bitset<>;

enum class FoldDirection { plus, minus };

struct FoldStep {
  std::vector<int> reflection_word;  // canonical reduced word of the reflection
  FoldDirection dir = FoldDirection::plus;
};

enum class CertKind { percolating, strong, vertex_percolating, edge_percolating };
enum class CertFailure { none, bad_start, step_mismatch, strongness_violation, end_not_full };

const char* cert_kind_name(CertKind k);
const char* cert_failure_name(CertFailure f);

// A replayable folding run on W/W_I: start set, step list, optional set
// trace, and the verification verdict. Certificates serialize reflections by
// reduced word, so they survive re-enumeration.
struct PercolationCertificate {
  std::string system_name;
  std::vector<int> subgroup;  // I
  CertKind kind = CertKind::percolating;
  std::vector<int> start;  // sorted coset ids
  std::vector<FoldStep> steps;
  std::vector<std::vector<int>> sets_trace;  // empty = not recorded
  bool verified = false;
  CertFailure failure = CertFailure::none;
};

// Preimage of J under the one-sided folding map of the step's reflection: a
// coset c survives iff folding sends it into J.
CosetSet fold(const CosetTable& table, const CosetSet& j, const FoldStep& step);

// Downward closure under Bruhat order on minimal representatives. Guarded:
// refuses once the pairwise comparisons exceed the budget.
bool is_stack(const Group& g, const CosetTable& quotient, const CosetSet& j,
              long long budget = 10'000'000);

// Level-by-level percolation from {W_I}: each depth-(L+1) coset is absorbed
// by a plus-fold with its BFS parent generator, in coset order.
PercolationCertificate build_percolating_sequence(const Group& g, const CosetTable& quotient,
                                                  CertKind kind = CertKind::percolating,
                                                  bool record_trace = false);

// Strong sequence from {W_I, w W_I} when exactly one generator is outside I:
// minus-folds along the start coset's reduced word up to the first outside
// letter, one plus-fold there, then level percolation.
PercolationCertificate build_strong_percolating_sequence(const Group& g,
                                                         const CosetTable& quotient,
                                                         int start_coset,
                                                         bool record_trace = false);

struct VerifyResult {
  bool pass = false;
  CertFailure failure = CertFailure::none;
  int step = -1;  // step at which verification failed, when applicable
};

VerifyResult verify_certificate(const Group& g, const CosetTable& quotient,
                                const PercolationCertificate& cert);

// Push a certificate along the automorphism induced by the word psi: the
// start set maps through psi's coset action and each reflection conjugates.
// Conjugation can reverse a reflection's canonical orientation, in which case
// the step direction flips.
PercolationCertificate translate_certificate(const Group& g, const CosetTable& quotient,
                                             const PercolationCertificate& cert,
                                             std::span<const int> psi_word);

struct SearchLimits {
  int quotient_guard = 20;
  std::uint64_t state_cap = std::uint64_t(1) << 20;
  int vertex_guard = 16;
  long long automorphism_budget = 1'000'000;
};

enum class SearchOutcome { found, not_found };

struct StrongSearchResult {
  SearchOutcome outcome = SearchOutcome::not_found;
  std::optional<PercolationCertificate> certificate;
  std::uint64_t states_visited = 0;
};

// Exhaustive BFS over coset subsets reachable from the start pair by strong
// folds with reflections (both directions). NOT_FOUND is an exhaustion proof.
StrongSearchResult strong_search_reflections(const Group& g, const CosetTable& quotient,
                                             std::pair<int, int> start,
                                             const SearchLimits& limits = {});

struct GraphFoldStep {
  std::vector<int> mapping;  // involutory automorphism, vertex images
  FoldDirection dir = FoldDirection::plus;
};

struct GraphSearchResult {
  SearchOutcome outcome = SearchOutcome::not_found;
  std::vector<GraphFoldStep> witness;
  std::uint64_t states_visited = 0;
  int moves_available = 0;
};

// Same search over one part of a bipartite incidence graph, but with moves
// drawn from every graph cut involution (involutory automorphisms paired with
// all valid L/R orientations), not only reflections.
GraphSearchResult strong_search_cut_involutions(const IncidenceGraph& graph, int part,
                                                std::pair<int, int> start,
                                                const SearchLimits& limits = {});

struct ObstructionResult {
  bool pass = false;
  long long pairs_checked = 0;
  std::string counterexample;
};

// With s, s' distinct generators outside I, every coset of an element of
// W_{I + s} is strictly raised by every reflection whose support contains s'.
// This certifies that no strong percolating sequence leaves W_{I + s}.
ObstructionResult obstruction_check(const Group& g, QuotientCache& cache,
                                    const std::vector<int>& subgroup, int s, int s_prime);

std::string to_json_text(const Group& g, const PercolationCertificate& cert);
std::string to_text(const Group& g, const PercolationCertificate& cert);

}  // namespace coxperc
