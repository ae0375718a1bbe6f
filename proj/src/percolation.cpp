#include "coxperc/percolation.hpp"

#include "coxperc/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace coxperc {

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::percolating: return "percolating";
    case CertKind::strong: return "strong";
    case CertKind::vertex_percolating: return "vertexPercolating";
    case CertKind::edge_percolating: return "edgePercolating";
  }
  return "unknown";
}

const char* cert_failure_name(CertFailure f) {
  switch (f) {
    case CertFailure::none: return "none";
    case CertFailure::bad_start: return "BAD_START";
    case CertFailure::step_mismatch: return "STEP_MISMATCH";
    case CertFailure::strongness_violation: return "STRONGNESS_VIOLATION";
    case CertFailure::end_not_full: return "END_NOT_FULL";
  }
  return "unknown";
}

namespace {

struct TableAction {
  std::vector<int> image;
  std::vector<Side> side;

  TableAction(const CosetTable& table, std::span<const int> word)
      : image(table.size()), side(table.size()) {
    for (int c = 0; c < table.size(); ++c) {
      image[c] = table.apply_word(c, word);
      int d = table.depth[image[c]] - table.depth[c];
      side[c] = d > 0 ? Side::L : (d < 0 ? Side::R : Side::F);
    }
  }

  int folded(int c, FoldDirection dir) const {
    if (dir == FoldDirection::plus) return side[c] == Side::R ? image[c] : c;
    return side[c] == Side::L ? image[c] : c;
  }
};

CosetSet fold_with(const TableAction& act, const CosetSet& j, FoldDirection dir) {
  CosetSet out(j.size());
  for (size_t c = 0; c < j.size(); ++c)
    if (j.test(act.folded(static_cast<int>(c), dir))) out.set(c);
  return out;
}

bool meets_closed_sides(const TableAction& act, const CosetSet& j) {
  bool fl = false, fr = false;
  for (size_t c = j.find_first(); c != CosetSet::npos; c = j.find_next(c)) {
    Side s = act.side[c];
    fl = fl || s != Side::R;
    fr = fr || s != Side::L;
    if (fl && fr) return true;
  }
  return false;
}

std::vector<int> set_to_ids(const CosetSet& j) {
  std::vector<int> out;
  for (size_t c = j.find_first(); c != CosetSet::npos; c = j.find_next(c))
    out.push_back(static_cast<int>(c));
  return out;
}

FoldStep simple_step(int gen, FoldDirection dir) { return FoldStep{{gen}, dir}; }

// Appends the level-(L+1) absorption folds of the inductive construction for
// L = from_level .. max, asserting the stack containment after each level.
void percolate_levels(const CosetTable& quotient, int from_level, CosetSet& j,
                      PercolationCertificate& cert, bool record_trace) {
  for (int level = from_level; level < quotient.max_depth(); ++level) {
    for (int c = 0; c < quotient.size(); ++c) {
      if (quotient.depth[c] != level + 1) continue;
      FoldStep step = simple_step(quotient.parent_gen[c], FoldDirection::plus);
      j = fold(quotient, j, step);
      cert.steps.push_back(std::move(step));
      if (record_trace) cert.sets_trace.push_back(set_to_ids(j));
    }
    for (int c = 0; c < quotient.size(); ++c)
      if (quotient.depth[c] <= level + 1 && !j.test(c))
        throw std::logic_error("level absorption failed to cover the next stack");
  }
}

}  // namespace

CosetSet fold(const CosetTable& table, const CosetSet& j, const FoldStep& step) {
  if (static_cast<int>(j.size()) != table.size())
    fail(Errc::bad_input, "coset set size does not match the table");
  TableAction act(table, step.reflection_word);
  return fold_with(act, j, step.dir);
}

bool is_stack(const Group& g, const CosetTable& quotient, const CosetSet& j, long long budget) {
  const long long q = quotient.size();
  if (q * q > budget) fail(Errc::guard, "stack check exceeds comparison budget");
  std::vector<int> reps(q);
  for (int c = 0; c < q; ++c) reps[c] = g.from_word(min_rep_word(quotient, c));
  for (size_t c = j.find_first(); c != CosetSet::npos; c = j.find_next(c))
    for (int d = 0; d < q; ++d)
      if (!j.test(d) && g.bruhat_leq(reps[d], reps[c])) return false;
  return true;
}

PercolationCertificate build_percolating_sequence(const Group& g, const CosetTable& quotient,
                                                  CertKind kind, bool record_trace) {
  PercolationCertificate cert;
  cert.system_name = g.system().name;
  cert.subgroup = quotient.subgroup;
  cert.kind = kind;
  cert.start = {0};
  CosetSet j(quotient.size());
  j.set(0);
  if (record_trace) cert.sets_trace.push_back(set_to_ids(j));
  percolate_levels(quotient, 0, j, cert, record_trace);
  if (!j.all()) throw std::logic_error("percolating sequence did not reach the full quotient");
  auto verdict = verify_certificate(g, quotient, cert);
  cert.verified = verdict.pass;
  cert.failure = verdict.failure;
  return cert;
}

PercolationCertificate build_strong_percolating_sequence(const Group& g,
                                                         const CosetTable& quotient,
                                                         int start_coset, bool record_trace) {
  if (static_cast<int>(quotient.subgroup.size()) != g.rank() - 1)
    fail(Errc::bad_subset, "strong construction needs exactly one generator outside I");
  if (start_coset <= 0 || start_coset >= quotient.size())
    fail(Errc::bad_start, "start coset must be a nonidentity coset of the quotient");

  int outside = -1;
  for (int gidx = 0; gidx < g.rank(); ++gidx)
    if (!std::binary_search(quotient.subgroup.begin(), quotient.subgroup.end(), gidx))
      outside = gidx;

  PercolationCertificate cert;
  cert.system_name = g.system().name;
  cert.subgroup = quotient.subgroup;
  cert.kind = CertKind::strong;
  cert.start = {0, start_coset};

  CosetSet j(quotient.size());
  j.set(0);
  j.set(start_coset);
  if (record_trace) cert.sets_trace.push_back(set_to_ids(j));

  // Walk the start coset's reduced word to the first outside letter: minus
  // folds keep {W_I, suffix coset} alive, the plus fold lands the stack
  // {W_I, s W_I}.
  auto word = min_rep_word(quotient, start_coset);
  size_t k = 0;
  while (word[k] != outside) ++k;
  for (size_t i = 0; i <= k; ++i) {
    FoldStep step = simple_step(word[i], i == k ? FoldDirection::plus : FoldDirection::minus);
    j = fold(quotient, j, step);
    cert.steps.push_back(std::move(step));
    if (record_trace) cert.sets_trace.push_back(set_to_ids(j));
    if (!j.test(0) || (i < k && !j.test(quotient.apply_word(
                                    0, std::span<const int>(word).subspan(i + 1)))))
      throw std::logic_error("strong construction lost its invariant pair");
  }
  int s_coset = quotient.act(0, outside);
  if (!j.test(0) || !j.test(s_coset))
    throw std::logic_error("strong construction did not reach the depth-one stack");

  percolate_levels(quotient, 1, j, cert, record_trace);
  if (!j.all()) throw std::logic_error("strong sequence did not reach the full quotient");
  auto verdict = verify_certificate(g, quotient, cert);
  cert.verified = verdict.pass;
  cert.failure = verdict.failure;
  if (!cert.verified) throw std::logic_error("constructed strong sequence failed verification");
  return cert;
}

VerifyResult verify_certificate(const Group& g, const CosetTable& quotient,
                                const PercolationCertificate& cert) {
  const int q = quotient.size();
  for (int c : cert.start)
    if (c < 0 || c >= q) return {false, CertFailure::bad_start, -1};
  std::vector<int> start = cert.start;
  std::sort(start.begin(), start.end());
  if (std::adjacent_find(start.begin(), start.end()) != start.end())
    return {false, CertFailure::bad_start, -1};
  if (cert.kind == CertKind::strong) {
    if (start.size() != 2) return {false, CertFailure::bad_start, -1};
  } else {
    if (start.size() != 1) return {false, CertFailure::bad_start, -1};
  }

  CosetSet j(q);
  for (int c : start) j.set(c);
  const bool has_trace = !cert.sets_trace.empty();
  if (has_trace && cert.sets_trace.size() != cert.steps.size() + 1)
    return {false, CertFailure::step_mismatch, -1};
  auto matches_trace = [&](const CosetSet& cur, size_t idx) {
    CosetSet expect(q);
    for (int c : cert.sets_trace[idx]) {
      if (c < 0 || c >= q) return false;
      expect.set(c);
    }
    return cur == expect;
  };
  if (has_trace && !matches_trace(j, 0)) return {false, CertFailure::step_mismatch, 0};

  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& step = cert.steps[i];
    int t = g.from_word(step.reflection_word);
    if (g.length(t) % 2 == 0 || g.mult(t, t) != 0)
      fail(Errc::bad_input, "step word is not an odd involution");
    TableAction act(quotient, step.reflection_word);
    if (cert.kind == CertKind::strong && !meets_closed_sides(act, j))
      return {false, CertFailure::strongness_violation, static_cast<int>(i)};
    j = fold_with(act, j, step.dir);
    if (has_trace && !matches_trace(j, i + 1))
      return {false, CertFailure::step_mismatch, static_cast<int>(i)};
  }
  if (!j.all()) return {false, CertFailure::end_not_full, -1};
  return {true, CertFailure::none, -1};
}

PercolationCertificate translate_certificate(const Group& g, const CosetTable& quotient,
                                             const PercolationCertificate& cert,
                                             std::span<const int> psi_word) {
  std::vector<int> psi_perm(quotient.size());
  for (int c = 0; c < quotient.size(); ++c) psi_perm[c] = quotient.apply_word(c, psi_word);
  const int psi = g.from_word(psi_word);
  const int psi_inv = g.inverse(psi);

  PercolationCertificate out;
  out.system_name = cert.system_name;
  out.subgroup = cert.subgroup;
  out.kind = cert.kind;
  for (int c : cert.start) out.start.push_back(psi_perm[c]);
  std::sort(out.start.begin(), out.start.end());

  for (const auto& step : cert.steps) {
    int t = g.from_word(step.reflection_word);
    int tprime = g.mult(psi, g.mult(t, psi_inv));
    FoldStep nstep;
    nstep.reflection_word = g.word_of(tprime);
    nstep.dir = step.dir;
    // The transported orientation is psi(L_t); flip when the canonical
    // orientation of the conjugate disagrees, witnessed on any moved coset.
    TableAction act(quotient, step.reflection_word);
    TableAction actp(quotient, nstep.reflection_word);
    for (int c = 0; c < quotient.size(); ++c) {
      if (act.side[c] == Side::F) continue;
      Side transported = act.side[c];
      Side canonical = actp.side[psi_perm[c]];
      if (canonical == Side::F) throw std::logic_error("conjugate action lost a moved coset");
      if (canonical != transported)
        nstep.dir = nstep.dir == FoldDirection::plus ? FoldDirection::minus : FoldDirection::plus;
      break;
    }
    out.steps.push_back(std::move(nstep));
  }
  for (const auto& ids : cert.sets_trace) {
    std::vector<int> mapped;
    mapped.reserve(ids.size());
    for (int c : ids) mapped.push_back(psi_perm[c]);
    std::sort(mapped.begin(), mapped.end());
    out.sets_trace.push_back(std::move(mapped));
  }
  auto verdict = verify_certificate(g, quotient, out);
  out.verified = verdict.pass;
  out.failure = verdict.failure;
  return out;
}

StrongSearchResult strong_search_reflections(const Group& g, const CosetTable& quotient,
                                             std::pair<int, int> start,
                                             const SearchLimits& limits) {
  const int q = quotient.size();
  if (q > limits.quotient_guard || q >= 63)
    fail(Errc::guard, "quotient size " + std::to_string(q) + " exceeds the search guard");
  const std::uint64_t nstates = std::uint64_t(1) << q;
  if (nstates > limits.state_cap) fail(Errc::guard, "state space exceeds the state cap");
  if (start.first == start.second || start.first < 0 || start.second < 0 || start.first >= q ||
      start.second >= q)
    fail(Errc::bad_start, "start pair must be two distinct cosets");

  struct Move {
    TableAction act;
    FoldDirection dir;
    const Reflection* t;
  };
  std::vector<Move> moves;
  for (const auto& t : g.reflections()) {
    TableAction act(quotient, t.element.word);
    moves.push_back({act, FoldDirection::plus, &t});
    moves.push_back({std::move(act), FoldDirection::minus, &t});
  }

  const std::uint64_t full = nstates - 1;
  const std::uint64_t init =
      (std::uint64_t(1) << start.first) | (std::uint64_t(1) << start.second);
  std::vector<std::uint32_t> prev_state(nstates, UINT32_MAX);
  std::vector<std::int32_t> prev_move(nstates, -1);
  std::deque<std::uint64_t> queue;
  prev_state[init] = static_cast<std::uint32_t>(init);
  prev_move[init] = -2;
  queue.push_back(init);
  StrongSearchResult res;
  res.states_visited = 1;

  while (!queue.empty()) {
    std::uint64_t state = queue.front();
    queue.pop_front();
    if (state == full) break;
    for (size_t m = 0; m < moves.size(); ++m) {
      const auto& mv = moves[m];
      // strongness: the current set must meet both closed sides
      bool fl = false, fr = false;
      for (int c = 0; c < q && !(fl && fr); ++c) {
        if (!(state >> c & 1)) continue;
        fl = fl || mv.act.side[c] != Side::R;
        fr = fr || mv.act.side[c] != Side::L;
      }
      if (!fl || !fr) continue;
      std::uint64_t next = 0;
      for (int c = 0; c < q; ++c)
        if (state >> mv.act.folded(c, mv.dir) & 1) next |= std::uint64_t(1) << c;
      if (prev_move[next] != -1) continue;
      prev_state[next] = static_cast<std::uint32_t>(state);
      prev_move[next] = static_cast<std::int32_t>(m);
      ++res.states_visited;
      queue.push_back(next);
    }
  }

  if (prev_move[full] == -1) {
    res.outcome = SearchOutcome::not_found;
    return res;
  }
  res.outcome = SearchOutcome::found;
  PercolationCertificate cert;
  cert.system_name = g.system().name;
  cert.subgroup = quotient.subgroup;
  cert.kind = CertKind::strong;
  cert.start = {std::min(start.first, start.second), std::max(start.first, start.second)};
  std::vector<std::int32_t> path;
  for (std::uint64_t s = full; prev_move[s] != -2; s = prev_state[s]) path.push_back(prev_move[s]);
  std::reverse(path.begin(), path.end());
  for (std::int32_t m : path)
    cert.steps.push_back({moves[m].t->element.word, moves[m].dir});
  auto verdict = verify_certificate(g, quotient, cert);
  cert.verified = verdict.pass;
  cert.failure = verdict.failure;
  if (!cert.verified) throw std::logic_error("search witness failed verification");
  res.certificate = std::move(cert);
  return res;
}

namespace {

// Involutory automorphisms of a small graph, by image backtracking with
// degree and partial-adjacency pruning.
class InvolutionEnumerator {
 public:
  InvolutionEnumerator(const std::vector<std::uint32_t>& adj, long long budget)
      : adj_(adj), n_(static_cast<int>(adj.size())), budget_(budget), img_(n_, -1) {}

  std::vector<std::vector<int>> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(int v) {
    while (v < n_ && img_[v] >= 0) ++v;
    if (v == n_) {
      if (!is_identity()) found_.push_back(img_);
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if (img_[w] >= 0 && img_[w] != v) continue;
      if (w != v && img_[w] == v) continue;  // would need img_[v] == w already
      if (popcount(adj_[v]) != popcount(adj_[w])) continue;
      if (--budget_ < 0) fail(Errc::automorphism_cap, "automorphism backtracking budget");
      img_[v] = w;
      img_[w] = v;
      if (consistent(v) && consistent(w)) extend(v + 1);
      img_[v] = -1;
      if (w != v) img_[w] = -1;
    }
  }

  bool consistent(int v) const {
    for (int u = 0; u < n_; ++u) {
      if (img_[u] < 0) continue;
      bool e1 = adj_[v] >> u & 1;
      bool e2 = adj_[img_[v]] >> img_[u] & 1;
      if (e1 != e2) return false;
    }
    return true;
  }

  bool is_identity() const {
    for (int v = 0; v < n_; ++v)
      if (img_[v] != v) return false;
    return true;
  }

  static int popcount(std::uint32_t x) { return __builtin_popcount(x); }

  const std::vector<std::uint32_t>& adj_;
  int n_;
  long long budget_;
  std::vector<int> img_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

GraphSearchResult strong_search_cut_involutions(const IncidenceGraph& graph, int part,
                                                std::pair<int, int> start,
                                                const SearchLimits& limits) {
  if (graph.parts_count() != 2)
    fail(Errc::bad_input, "cut-involution search expects a bipartite graph");
  const int nv = graph.vertex_count();
  if (nv > limits.vertex_guard)
    fail(Errc::guard, "graph has more vertices than the cut-involution guard");
  if (part < 0 || part >= 2) fail(Errc::bad_index, "part index");
  const int qa = graph.parts[part].size();
  if (start.first == start.second || start.first < 0 || start.second < 0 || start.first >= qa ||
      start.second >= qa)
    fail(Errc::bad_start, "start pair must be two distinct cosets of the part");

  std::vector<std::uint32_t> adj(nv, 0);
  for (int e = 0; e < graph.edge_count(); ++e) {
    auto vs = graph.edge_vertices(e);
    adj[vs[0]] |= std::uint32_t(1) << vs[1];
    adj[vs[1]] |= std::uint32_t(1) << vs[0];
  }

  auto involutions = InvolutionEnumerator(adj, limits.automorphism_budget).run();

  const int off = graph.part_offset(part);
  struct Move {
    std::vector<int> mapping;
    FoldDirection dir;
    std::uint32_t fl_a = 0, fr_a = 0;  // (F|L) and (F|R) inside the part
    std::uint32_t leak = 0;            // part states hit from outside vertices
    std::vector<int> fold_image;       // per part coset: folded vertex
  };
  std::vector<Move> moves;

  for (const auto& phi : involutions) {
    // components of the non-fixed induced subgraph must be swapped in pairs
    std::uint32_t moved = 0;
    for (int v = 0; v < nv; ++v)
      if (phi[v] != v) moved |= std::uint32_t(1) << v;
    std::vector<int> comp(nv, -1);
    int ncomp = 0;
    for (int v = 0; v < nv; ++v) {
      if (!(moved >> v & 1) || comp[v] >= 0) continue;
      std::deque<int> bfs{v};
      comp[v] = ncomp;
      while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop_front();
        for (int u = 0; u < nv; ++u)
          if ((adj[x] >> u & 1) && (moved >> u & 1) && comp[u] < 0) {
            comp[u] = ncomp;
            bfs.push_back(u);
          }
      }
      ++ncomp;
    }
    std::vector<int> partner(ncomp, -1);
    bool ok = true;
    for (int v = 0; v < nv && ok; ++v) {
      if (!(moved >> v & 1)) continue;
      int c = comp[v], pc = comp[phi[v]];
      if (c == pc) ok = false;  // a self-paired component admits no orientation
      else if (partner[c] < 0) partner[c] = pc;
      else if (partner[c] != pc) ok = false;
    }
    if (!ok) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int c = 0; c < ncomp; ++c)
      if (c < partner[c]) pairs.emplace_back(c, partner[c]);

    for (std::uint32_t orient = 0; orient < (std::uint32_t(1) << pairs.size()); ++orient) {
      std::uint32_t lmask = 0, rmask = 0;
      for (size_t k = 0; k < pairs.size(); ++k) {
        int lcomp = (orient >> k & 1) ? pairs[k].second : pairs[k].first;
        for (int v = 0; v < nv; ++v)
          if ((moved >> v & 1)) {
            if (comp[v] == lcomp) lmask |= std::uint32_t(1) << v;
            else if (comp[v] == pairs[k].first || comp[v] == pairs[k].second)
              rmask |= std::uint32_t(1) << v;
          }
      }
      std::uint32_t fmask = ~moved & ((std::uint32_t(1) << nv) - 1);
      for (FoldDirection dir : {FoldDirection::plus, FoldDirection::minus}) {
        Move mv;
        mv.mapping = phi;
        mv.dir = dir;
        auto folded = [&](int v) {
          if (dir == FoldDirection::plus) return (rmask >> v & 1) ? phi[v] : v;
          return (lmask >> v & 1) ? phi[v] : v;
        };
        for (int c = 0; c < qa; ++c) {
          int v = off + c;
          if ((fmask | lmask) >> v & 1) mv.fl_a |= std::uint32_t(1) << c;
          if ((fmask | rmask) >> v & 1) mv.fr_a |= std::uint32_t(1) << c;
          mv.fold_image.push_back(folded(v));
        }
        for (int v = 0; v < nv; ++v) {
          if (v >= off && v < off + qa) continue;
          int fv = folded(v);
          if (fv >= off && fv < off + qa) mv.leak |= std::uint32_t(1) << (fv - off);
        }
        moves.push_back(std::move(mv));
      }
    }
  }

  const std::uint64_t nstates = std::uint64_t(1) << qa;
  if (nstates > limits.state_cap) fail(Errc::guard, "state space exceeds the state cap");
  const std::uint32_t full = static_cast<std::uint32_t>(nstates - 1);
  const std::uint32_t init =
      (std::uint32_t(1) << start.first) | (std::uint32_t(1) << start.second);
  std::vector<std::uint32_t> prev_state(nstates, UINT32_MAX);
  std::vector<std::int32_t> prev_move(nstates, -1);
  std::deque<std::uint32_t> queue;
  prev_state[init] = init;
  prev_move[init] = -2;
  queue.push_back(init);

  GraphSearchResult res;
  res.moves_available = static_cast<int>(moves.size());
  res.states_visited = 1;
  while (!queue.empty()) {
    std::uint32_t state = queue.front();
    queue.pop_front();
    if (state == full) break;
    for (size_t m = 0; m < moves.size(); ++m) {
      const auto& mv = moves[m];
      if (!(state & mv.fl_a) || !(state & mv.fr_a)) continue;
      if (state & mv.leak) continue;  // the preimage would leave the part
      std::uint32_t next = 0;
      for (int c = 0; c < qa; ++c) {
        int fv = mv.fold_image[c];
        if (fv >= off && fv < off + qa && (state >> (fv - off) & 1))
          next |= std::uint32_t(1) << c;
      }
      if (prev_move[next] != -1) continue;
      prev_state[next] = state;
      prev_move[next] = static_cast<std::int32_t>(m);
      ++res.states_visited;
      queue.push_back(next);
    }
  }

  if (prev_move[full] == -1) {
    res.outcome = SearchOutcome::not_found;
    return res;
  }
  res.outcome = SearchOutcome::found;
  std::vector<std::int32_t> path;
  for (std::uint32_t s = full; prev_move[s] != -2; s = prev_state[s]) path.push_back(prev_move[s]);
  std::reverse(path.begin(), path.end());
  for (std::int32_t m : path) res.witness.push_back({moves[m].mapping, moves[m].dir});
  return res;
}

ObstructionResult obstruction_check(const Group& g, QuotientCache& cache,
                                    const std::vector<int>& subgroup, int s, int s_prime) {
  std::vector<int> I = subgroup;
  std::sort(I.begin(), I.end());
  if (std::binary_search(I.begin(), I.end(), s) || std::binary_search(I.begin(), I.end(), s_prime) ||
      s == s_prime)
    fail(Errc::bad_input, "s and s' must be distinct generators outside I");
  if (static_cast<int>(I.size()) > g.rank() - 2)
    fail(Errc::bad_subset, "obstruction needs at least two generators outside I");

  std::vector<int> K = I;
  K.push_back(s);
  std::sort(K.begin(), K.end());
  const CosetTable& quot_i = cache.table(I);
  const CosetTable& quot_k = cache.table(K);

  // cosets of every element, by peeling BFS parents
  std::vector<int> coset_i(g.order()), coset_k(g.order());
  coset_i[0] = 0;
  coset_k[0] = 0;
  for (int w = 1; w < g.order(); ++w) {
    int a = g.table().parent_gen[w];
    int wp = g.act(w, a);
    coset_i[w] = quot_i.act(coset_i[wp], a);
    coset_k[w] = quot_k.act(coset_k[wp], a);
  }

  ObstructionResult res;
  res.pass = true;
  for (const auto& t : g.reflections()) {
    if (!std::binary_search(t.support.begin(), t.support.end(), s_prime)) continue;
    for (int w = 0; w < g.order(); ++w) {
      if (coset_k[w] != 0) continue;  // w outside the parabolic W_{I+s}
      ++res.pairs_checked;
      int tw = g.apply_word(w, t.element.word);
      if (quot_i.depth[coset_i[tw]] <= quot_i.depth[coset_i[w]]) {
        res.pass = false;
        if (res.counterexample.empty()) {
          std::ostringstream os;
          os << "t index " << t.element.index << ", w index " << w;
          res.counterexample = os.str();
        }
      }
    }
  }
  return res;
}

std::string to_json_text(const Group& g, const PercolationCertificate& cert) {
  nlohmann::json j;
  j["system"] = cert.system_name;
  j["I"] = nlohmann::json::array();
  for (int gen : cert.subgroup) j["I"].push_back(g.system().generators[gen]);
  j["kind"] = cert_kind_name(cert.kind);
  j["start"] = cert.start;
  j["steps"] = nlohmann::json::array();
  for (const auto& step : cert.steps) {
    nlohmann::json s;
    s["t"] = nlohmann::json::array();
    for (int gen : step.reflection_word) s["t"].push_back(g.system().generators[gen]);
    s["dir"] = step.dir == FoldDirection::plus ? "+" : "-";
    j["steps"].push_back(s);
  }
  j["verified"] = cert.verified;
  j["failure"] =
      cert.failure == CertFailure::none ? nlohmann::json() : cert_failure_name(cert.failure);
  return j.dump(2) + "\n";
}

std::string to_text(const Group& g, const PercolationCertificate& cert) {
  std::ostringstream out;
  out << cert_kind_name(cert.kind) << " certificate on " << cert.system_name << " / {"
      << subset_to_string(g.system(), cert.subgroup) << "}: start {";
  for (size_t i = 0; i < cert.start.size(); ++i) out << (i ? "," : "") << cert.start[i];
  out << "}, " << cert.steps.size() << " steps, "
      << (cert.verified ? "verified" : std::string("FAILED ") + cert_failure_name(cert.failure))
      << "\n";
  return out.str();
}

}  // namespace coxperc
