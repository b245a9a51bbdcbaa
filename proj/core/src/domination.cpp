#include "polarnet/domination.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>

#include "polarnet/errors.hpp"

namespace polarnet {

double DominationResult::covered_fraction() const noexcept {
  return n_target == 0 ? 1.0 : static_cast<double>(covered()) / static_cast<double>(n_target);
}

std::size_t coverage_target(double rho, std::size_t n) {
  const double exact = rho * static_cast<double>(n);
  const double nearest = std::round(exact);
  if (std::abs(exact - nearest) <= 1e-9 * std::max(1.0, exact)) return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(exact));
}

double harmonic_number(std::size_t x) {
  double h = 0.0;
  for (std::size_t i = x; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h;
}

std::vector<VertexId> spreaders(const DirectedGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) > 0) out.push_back(v);
  }
  return out;
}

namespace {

std::vector<char> membership(std::span<const VertexId> ids, std::size_t n, const char* what) {
  std::vector<char> in(n, 0);
  for (VertexId v : ids) {
    if (v >= n) throw ArgumentError(std::string(what) + " vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return in;
}

// Incremental greedy covering state. A candidate's span is the set of
// uncovered targets in its closed out-neighborhood; only the sizes are
// stored, and each pick decrements the candidates whose spans contained a
// newly covered target, found through the reverse adjacency.
class GreedyCoverage {
 public:
  GreedyCoverage(const DirectedGraph& g, std::span<const VertexId> candidates, std::span<const VertexId> targets)
      : g_(g),
        is_candidate_(membership(candidates, g.vertex_count(), "candidate")),
        is_target_(membership(targets, g.vertex_count(), "target")),
        covered_(g.vertex_count(), 0),
        span_(g.vertex_count(), 0) {
    const std::size_t n = g.vertex_count();
    n_target_ = static_cast<std::size_t>(std::count(is_target_.begin(), is_target_.end(), 1));

    in_offsets_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w : g.out_neighbors(v)) ++in_offsets_[w + 1];
    }
    for (std::size_t v = 0; v < n; ++v) in_offsets_[v + 1] += in_offsets_[v];
    in_sources_.resize(in_offsets_.back());
    std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId w : g.out_neighbors(v)) in_sources_[cursor[w]++] = v;
    }

    for (VertexId v = 0; v < n; ++v) {
      if (!is_candidate_[v]) continue;
      span_[v] = fresh_span(v);
      heap_.push({span_[v], v});
    }
  }

  std::size_t n_target() const { return n_target_; }
  std::size_t covered() const { return covered_count_; }

  struct Pick {
    VertexId vertex;
    std::size_t gain;
  };

  // Largest span with ties to the lowest id; nullopt once no span is positive.
  std::optional<Pick> step() {
    while (!heap_.empty()) {
      const Entry top = heap_.top();
      heap_.pop();
      if (top.span != span_[top.vertex]) {
        heap_.push({span_[top.vertex], top.vertex});
        continue;
      }
      if (top.span == 0) return std::nullopt;
      cover_from(top.vertex);
      return Pick{top.vertex, top.span};
    }
    return std::nullopt;
  }

  void verify() const {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (is_candidate_[v] && span_[v] != fresh_span(v)) {
        throw std::logic_error("span bookkeeping diverged at vertex " + std::to_string(v));
      }
    }
  }

 private:
  struct Entry {
    std::size_t span;
    VertexId vertex;
    bool operator<(const Entry& o) const { return span != o.span ? span < o.span : vertex > o.vertex; }
  };

  bool open(VertexId w) const { return is_target_[w] && !covered_[w]; }

  std::size_t fresh_span(VertexId v) const {
    std::size_t s = open(v) ? 1 : 0;
    for (VertexId w : g_.out_neighbors(v)) s += open(w) ? 1 : 0;
    return s;
  }

  void cover(VertexId w) {
    covered_[w] = 1;
    ++covered_count_;
    if (is_candidate_[w]) --span_[w];
    for (std::size_t e = in_offsets_[w]; e < in_offsets_[w + 1]; ++e) {
      const VertexId x = in_sources_[e];
      if (is_candidate_[x]) --span_[x];
    }
  }

  void cover_from(VertexId u) {
    if (open(u)) cover(u);
    for (VertexId w : g_.out_neighbors(u)) {
      if (open(w)) cover(w);
    }
  }

  const DirectedGraph& g_;
  std::vector<char> is_candidate_;
  std::vector<char> is_target_;
  std::vector<char> covered_;
  std::vector<std::size_t> span_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_sources_;
  std::priority_queue<Entry> heap_;
  std::size_t n_target_ = 0;
  std::size_t covered_count_ = 0;
};

std::vector<VertexId> all_vertices(std::size_t n) {
  std::vector<VertexId> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<VertexId>(i);
  return v;
}

void check_rho(double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw ArgumentError("rho must lie in (0, 1], got " + std::to_string(rho));
}

DominationResult solve(const DirectedGraph& g, double rho, std::span<const VertexId> candidates,
                       std::span<const VertexId> targets, std::string description, const DominationOptions& options) {
  check_rho(rho);
  GreedyCoverage state(g, candidates, targets);
  DominationResult result;
  result.rho = rho;
  result.n_target = state.n_target();
  result.target = coverage_target(rho, result.n_target);
  result.candidates = std::move(description);
  while (state.covered() < result.target) {
    const auto pick = state.step();
    if (!pick) throw InfeasibleError(state.covered(), result.target, result.n_target);
    result.selected.push_back(pick->vertex);
    result.covered_after_step.push_back(state.covered());
    if (options.verify_spans) state.verify();
  }
  return result;
}

}  // namespace

DominationResult greedy_pdds(const DirectedGraph& g, double rho, std::optional<std::span<const VertexId>> candidates,
                             std::optional<std::span<const VertexId>> cover_targets, const DominationOptions& options) {
  std::vector<VertexId> default_candidates;
  std::vector<VertexId> default_targets;
  std::string description = "all spreaders";
  if (!candidates) {
    default_candidates = spreaders(g);
    candidates = default_candidates;
  } else {
    description = "subset of " + std::to_string(candidates->size()) + " vertices";
  }
  if (!cover_targets) {
    default_targets = all_vertices(g.vertex_count());
    cover_targets = default_targets;
  }
  return solve(g, rho, *candidates, *cover_targets, std::move(description), options);
}

std::optional<std::size_t> brute_force_pdds(const DirectedGraph& g, double rho, std::span<const VertexId> candidates,
                                            std::optional<std::span<const VertexId>> cover_targets) {
  check_rho(rho);
  std::vector<VertexId> cands(candidates.begin(), candidates.end());
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  if (cands.size() > kBruteForceCandidateLimit) {
    throw ArgumentError("exhaustive search refuses " + std::to_string(cands.size()) + " candidates (limit " +
                        std::to_string(kBruteForceCandidateLimit) + ")");
  }
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> targets = cover_targets ? std::vector<VertexId>(cover_targets->begin(), cover_targets->end())
                                                : all_vertices(n);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::vector<std::size_t> slot(n, SIZE_MAX);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] >= n) throw ArgumentError("target vertex out of range");
    slot[targets[i]] = i;
  }
  for (VertexId c : cands) {
    if (c >= n) throw ArgumentError("candidate vertex out of range");
  }

  const std::size_t need = coverage_target(rho, targets.size());
  if (need == 0) return 0;
  const std::size_t words = (targets.size() + 63) / 64;
  using Mask = std::vector<std::uint64_t>;
  std::vector<Mask> masks(cands.size(), Mask(words, 0));
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto mark = [&](VertexId w) {
      if (slot[w] != SIZE_MAX) masks[i][slot[w] / 64] |= std::uint64_t{1} << (slot[w] % 64);
    };
    mark(cands[i]);
    for (VertexId w : g.out_neighbors(cands[i])) mark(w);
  }
  const auto count = [](const Mask& m) {
    std::size_t c = 0;
    for (auto w : m) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  };

  // Depth-first enumeration of subsets of exactly `size` candidates.
  std::vector<Mask> stack;
  const auto search = [&](auto&& self, std::size_t start, std::size_t left) -> bool {
    const std::size_t depth = stack.size() - 1;
    if (left == 0) return count(stack[depth]) >= need;
    for (std::size_t i = start; i + left <= cands.size(); ++i) {
      Mask next = stack[depth];
      for (std::size_t w = 0; w < words; ++w) next[w] |= masks[i][w];
      stack.push_back(std::move(next));
      const bool found = self(self, i + 1, left - 1);
      stack.pop_back();
      if (found) return true;
    }
    return false;
  };
  for (std::size_t size = 1; size <= cands.size(); ++size) {
    stack.assign(1, Mask(words, 0));
    if (search(search, 0, size)) return size;
  }
  return std::nullopt;
}

std::vector<CurvePoint> coverage_curve(const DirectedGraph& g, std::span<const VertexId> candidates,
                                       std::span<const VertexId> cover_targets, std::size_t max_spreaders) {
  if (max_spreaders < 1) throw ArgumentError("max_spreaders must be at least 1");
  GreedyCoverage state(g, candidates, cover_targets);
  std::vector<CurvePoint> curve;
  if (state.n_target() == 0) return curve;
  while (curve.size() < max_spreaders) {
    if (!state.step()) break;
    curve.push_back({curve.size() + 1, static_cast<double>(state.covered()) / static_cast<double>(state.n_target())});
  }
  return curve;
}

namespace {

std::vector<VertexId> group_members(const DirectedGraph& g, const Partition& p, GroupId group) {
  if (p.vertex_count() != g.vertex_count()) throw ArgumentError("partition and graph vertex counts differ");
  if (group >= p.group_count()) {
    throw ArgumentError("group index " + std::to_string(group) + " out of range for " +
                        std::to_string(p.group_count()) + " groups");
  }
  return p.members(group);
}

}  // namespace

GroupInstance in_group_instance(const DirectedGraph& g, const Partition& p, GroupId group) {
  const auto members = group_members(g, p, group);
  GroupInstance inst;
  inst.subgraph = induced_subgraph(g, members);
  const auto& to_parent = inst.subgraph->to_parent;
  for (VertexId local = 0; local < to_parent.size(); ++local) {
    if (g.out_degree(to_parent[local]) > 0) inst.candidates.push_back(local);
    inst.targets.push_back(local);
  }
  return inst;
}

GroupInstance network_by_group_instance(const DirectedGraph& g, const Partition& p, GroupId group) {
  GroupInstance inst;
  for (VertexId v : group_members(g, p, group)) {
    if (g.out_degree(v) > 0) inst.candidates.push_back(v);
  }
  inst.targets = all_vertices(g.vertex_count());
  return inst;
}

DominationResult in_group_domination(const DirectedGraph& g, const Partition& p, GroupId group, double rho,
                                     const DominationOptions& options) {
  const auto inst = in_group_instance(g, p, group);
  auto result = solve(inst.graph(g), rho, inst.candidates, inst.targets,
                      "spreaders of group " + std::to_string(group) + " within the group", options);
  for (auto& v : result.selected) v = inst.to_global(v);
  return result;
}

DominationResult network_domination_by_group(const DirectedGraph& g, const Partition& p, GroupId group, double rho,
                                             const DominationOptions& options) {
  const auto inst = network_by_group_instance(g, p, group);
  return solve(g, rho, inst.candidates, inst.targets,
               "spreaders of group " + std::to_string(group) + " across the network", options);
}

}  // namespace polarnet
