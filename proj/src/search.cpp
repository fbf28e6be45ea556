#include "dho/search.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace dho {

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::DualArc: return "dual_arc";
    case SearchMode::DistanceClique: return "distance_clique";
    case SearchMode::Existence: return "existence";
  }
  return "";
}

GeneratorGraph build_generator_graph(const PolarSpace& space, std::uint64_t cap) {
  GeneratorGraph g{enumerate_generators(space, cap), {}, {}};
  const auto& gens = g.set.generators;
  const std::size_t m = gens.size();
  g.meet_dim.assign(m, std::vector<int>(m, space.rank));
  g.meet_point.assign(m, std::vector<int>(m, -1));
  std::unordered_map<Subspace, int, SubspaceHash> point_ids;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Subspace x = intersect(gens[i], gens[j]);
      const int d = static_cast<int>(x.dim());
      g.meet_dim[i][j] = g.meet_dim[j][i] = d;
      if (d == 1) {
        const int id = point_ids.emplace(std::move(x), static_cast<int>(point_ids.size())).first->second;
        g.meet_point[i][j] = g.meet_point[j][i] = id;
      }
    }
  return g;
}

namespace {

using Clock = std::chrono::steady_clock;

struct RootOutcome {
  std::size_t best = 0;
  std::vector<int> witness;
  std::uint64_t nodes = 0;
  bool found = false;
  std::optional<Rational> min_vanhove;
};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
  // Existence mode: lowest root index known to hold a witness.
  std::atomic<std::size_t> first_found{SIZE_MAX};
};

class RootSearch {
 public:
  RootSearch(const GeneratorGraph& graph, SearchMode mode, int clique_dim, std::size_t target, std::size_t cap,
             std::uint64_t t, std::uint64_t budget, Shared& shared)
      : g_(graph),
        mode_(mode),
        clique_dim_(clique_dim),
        target_(target),
        cap_(cap),
        t_(t),
        budget_(budget),
        shared_(shared),
        rank_(graph.set.space.rank) {}

  RootOutcome run(int root) {
    std::vector<int> arc{root};
    std::vector<int> cand;
    const int m = static_cast<int>(g_.meet_dim.size());
    for (int c = root + 1; c < m; ++c) {
      if (adjacent(root, c)) cand.push_back(c);
    }
    dfs(arc, cand);
    return std::move(out_);
  }

 private:
  bool adjacent(int a, int b) const {
    if (mode_ == SearchMode::DistanceClique) return g_.meet_dim[a][b] == clique_dim_;
    return g_.meet_point[a][b] >= 0;
  }

  bool stop() const {
    return shared_.budget_hit.load(std::memory_order_relaxed) || out_.found;
  }

  void record(const std::vector<int>& arc) {
    std::vector<std::vector<int>> dims(arc.size(), std::vector<int>(arc.size()));
    for (std::size_t i = 0; i < arc.size(); ++i)
      for (std::size_t j = 0; j < arc.size(); ++j) dims[i][j] = g_.meet_dim[arc[i]][arc[j]];
    Rational v = vanhove_sum(inner_distribution(dims, rank_), t_);
    if (!out_.min_vanhove || v < *out_.min_vanhove) out_.min_vanhove = v;
    if (arc.size() > out_.best) {
      out_.best = arc.size();
      out_.witness = arc;
    }
    if (mode_ == SearchMode::Existence && arc.size() == target_) out_.found = true;
  }

  void dfs(std::vector<int>& arc, const std::vector<int>& cand) {
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      shared_.budget_hit = true;
      return;
    }
    ++out_.nodes;
    record(arc);
    if (stop() || arc.size() >= cap_) return;
    const std::size_t goal = mode_ == SearchMode::Existence ? target_ : out_.best + 1;
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
      // Bound cut: the remaining candidates cannot reach the goal.
      if (arc.size() + (cand.size() - idx) < goal) break;
      const int c = cand[idx];
      std::vector<int> next;
      next.reserve(cand.size() - idx);
      for (std::size_t k = idx + 1; k < cand.size(); ++k) {
        const int d = cand[k];
        if (!adjacent(c, d)) continue;
        if (mode_ != SearchMode::DistanceClique) {
          // No three through a point: c ∩ d must differ from c ∩ M for every member M.
          const int p = g_.meet_point[c][d];
          bool ok = true;
          for (int member : arc) {
            if (g_.meet_point[c][member] == p) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
        }
        next.push_back(d);
      }
      arc.push_back(c);
      dfs(arc, next);
      arc.pop_back();
      if (stop()) return;
    }
  }

  const GeneratorGraph& g_;
  SearchMode mode_;
  int clique_dim_;
  std::size_t target_;
  std::size_t cap_;
  std::uint64_t t_;
  std::uint64_t budget_;
  Shared& shared_;
  int rank_;
  RootOutcome out_;
};

SearchResult run_search(const GeneratorGraph& graph, SearchMode mode, int distance, std::size_t target,
                        const SearchOptions& options) {
  const auto start = Clock::now();
  const PolarSpace& space = graph.set.space;
  const int m = static_cast<int>(graph.set.generators.size());

  std::size_t cap = SIZE_MAX;
  if (mode != SearchMode::DistanceClique) {
    const BigInt max_arc = dho_size(space.rank, space.field().order());
    cap = max_arc > BigInt(SIZE_MAX) ? SIZE_MAX : static_cast<std::size_t>(max_arc);
  }
  if (options.size_cap) cap = std::min(cap, *options.size_cap);
  if (mode == SearchMode::Existence) cap = std::min(cap, target);

  Shared shared;
  std::vector<RootOutcome> outcomes(static_cast<std::size_t>(m));
  std::vector<bool> done(static_cast<std::size_t>(m), false);
  std::atomic<int> next_root{0};
  const int clique_dim = space.rank - distance;

  auto worker = [&] {
    for (;;) {
      const int root = next_root.fetch_add(1);
      if (root >= m || shared.budget_hit) return;
      if (mode == SearchMode::Existence && static_cast<std::size_t>(root) > shared.first_found) return;
      RootSearch rs(graph, mode, clique_dim, target, cap, space.t, options.node_budget, shared);
      outcomes[static_cast<std::size_t>(root)] = rs.run(root);
      if (!shared.budget_hit) done[static_cast<std::size_t>(root)] = true;
      if (outcomes[static_cast<std::size_t>(root)].found) {
        std::size_t cur = shared.first_found;
        while (static_cast<std::size_t>(root) < cur && !shared.first_found.compare_exchange_weak(cur, root)) {
        }
      }
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchResult result;
  result.space = space;
  result.mode = mode;
  result.target_distance = distance;
  result.target_size = target;
  result.generators = static_cast<std::size_t>(m);

  // Merge in root order; existence mode stops at the first successful root
  // so that counts do not depend on scheduling.
  std::size_t last = static_cast<std::size_t>(m);
  if (mode == SearchMode::Existence && shared.first_found != SIZE_MAX) last = shared.first_found + 1;
  bool complete = !shared.budget_hit;
  for (std::size_t r = 0; r < last; ++r) {
    const auto& o = outcomes[r];
    if (!done[r]) complete = false;
    result.nodes += o.nodes;
    if (o.min_vanhove && (!result.min_vanhove_sum || *o.min_vanhove < *result.min_vanhove_sum)) {
      result.min_vanhove_sum = o.min_vanhove;
    }
    if (o.best > result.max_size_found) {
      result.max_size_found = o.best;
      result.witness_indices.assign(o.witness.begin(), o.witness.end());
    }
    if (o.found) result.found = true;
  }
  result.exhaustive = complete;
  if (mode == SearchMode::Existence && result.found) result.exhaustive = true;

  for (auto i : result.witness_indices) result.witness.push_back(graph.set.generators[i]);

  // Re-verify the witness from scratch.
  if (!result.witness.empty()) {
    if (mode == SearchMode::DistanceClique) {
      for (std::size_t i = 0; i < result.witness.size(); ++i)
        for (std::size_t j = i + 1; j < result.witness.size(); ++j)
          if (dual_polar_distance(space, result.witness[i], result.witness[j]) != distance) {
            throw std::logic_error("clique witness failed re-verification");
          }
    } else if (!dual_arc_verify(DualArc(result.witness)).is_dual_arc) {
      throw std::logic_error("dual arc witness failed re-verification");
    }
  }

  auto& cert = result.certificate;
  cert.push_back("root split: every generator is tried as the smallest-index member of the family");
  cert.push_back("anti-symmetry: a partial family is extended only by generators later in canonical order");
  if (mode == SearchMode::DistanceClique) {
    cert.push_back("adjacency: candidates are kept only while at distance " + std::to_string(distance) +
                   " from every member");
  } else {
    cert.push_back("constraint propagation: candidates are kept only while meeting every member in a point "
                   "not already used on that member");
  }
  if (mode == SearchMode::Existence) {
    cert.push_back("target cut: a branch is abandoned when members plus candidates fall below " +
                   std::to_string(target));
  } else {
    cert.push_back("bound cut: a branch is abandoned when members plus candidates cannot exceed the best size "
                   "found under the same root");
  }
  if (cap != SIZE_MAX) cert.push_back("size cap: branches stop at size " + std::to_string(cap));
  if (shared.budget_hit) cert.push_back("node budget of " + std::to_string(options.node_budget) + " exhausted");

  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace

SearchResult max_dual_arc(const GeneratorGraph& graph, const SearchOptions& options) {
  return run_search(graph, SearchMode::DualArc, graph.set.space.rank - 1, 0, options);
}

SearchResult max_dual_arc(const PolarSpace& space, const SearchOptions& options) {
  return max_dual_arc(build_generator_graph(space, options.generator_cap), options);
}

SearchResult exists_dual_arc_of_size(const GeneratorGraph& graph, std::size_t k, const SearchOptions& options) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "target size must be positive");
  return run_search(graph, SearchMode::Existence, graph.set.space.rank - 1, k, options);
}

SearchResult exists_dual_arc_of_size(const PolarSpace& space, std::size_t k, const SearchOptions& options) {
  return exists_dual_arc_of_size(build_generator_graph(space, options.generator_cap), k, options);
}

SearchResult max_distance_clique(const GeneratorGraph& graph, int d, const SearchOptions& options) {
  if (d < 0 || d > graph.set.space.rank) fail(ErrorKind::InvalidArgument, "distance must lie in [0, rank]");
  return run_search(graph, SearchMode::DistanceClique, d, 0, options);
}

SearchResult max_distance_clique(const PolarSpace& space, int d, const SearchOptions& options) {
  return max_distance_clique(build_generator_graph(space, options.generator_cap), d, options);
}

}  // namespace dho
