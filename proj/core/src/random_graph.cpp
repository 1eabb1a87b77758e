#include "tcover/random_graph.hpp"

#include "tcover/error.hpp"
#include "tcover/prng.hpp"

namespace tcover {

SampledGraph sample_gnp(const RandomModel& model) {
  if (model.n < 0) throw InvalidArgument("negative vertex count");
  if (!(model.p >= 0.0 && model.p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
  const CounterRng rng(model.seed);
  const auto n = static_cast<std::uint64_t>(model.n);
  Graph::EdgeList edges;
  for (std::uint64_t u = 0; u < n; ++u)
    for (std::uint64_t v = u + 1; v < n; ++v)
      if (rng.uniform(u * n + v) < model.p) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return {Graph(model.n, std::move(edges)), model, std::string(kGeneratorName)};
}

ColouredGraph random_colouring(const Graph& g, int r, std::uint64_t seed) {
  RngStream stream(seed);
  std::vector<ColouredEdge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.push_back({u, v, static_cast<int>(stream.below(r)) + 1});
  return ColouredGraph(g.n(), r, std::move(edges));
}

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not-found";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

class SparseSetSearch {
 public:
  SparseSetSearch(const Graph& g, int m, int k, const SparseSetOptions& options)
      : g_(g), m_(m), k_(k), options_(options), chosen_neighbours_(g.n(), 0) {}

  SparseSetResult run() {
    SparseSetResult result;
    const bool done = extend(0);
    result.nodes = nodes_;
    if (static_cast<int>(chosen_.size()) == m_) {
      result.status = SearchStatus::Found;
      result.vertices = chosen_;
    } else {
      result.status = done ? SearchStatus::NotFound : SearchStatus::BudgetExhausted;
    }
    return result;
  }

 private:
  bool admissible(int v) const {
    // chosen_neighbours_[w] counts chosen vertices adjacent to w.
    if (chosen_neighbours_[v] > 0) return false;
    for (int w : g_.neighbours(v))
      if (chosen_neighbours_[w] + 1 >= k_) return false;
    return true;
  }

  void mark(int v, int delta) {
    for (int w : g_.neighbours(v)) chosen_neighbours_[w] += delta;
  }

  // Returns false when the budget ran out, true when this subtree is finished.
  // A found set leaves chosen_ at size m.
  bool extend(int from) {
    if (static_cast<int>(chosen_.size()) == m_) return true;
    const int needed = m_ - static_cast<int>(chosen_.size());
    for (int v = from; v + needed <= g_.n(); ++v) {
      if (!options_.exhaustive && nodes_ >= options_.node_budget) return false;
      ++nodes_;
      if (!admissible(v)) continue;
      chosen_.push_back(v);
      mark(v, +1);
      const bool finished = extend(v + 1);
      if (static_cast<int>(chosen_.size()) == m_) return true;
      mark(v, -1);
      chosen_.pop_back();
      if (!finished) return false;
    }
    return true;
  }

  const Graph& g_;
  int m_;
  int k_;
  SparseSetOptions options_;
  std::vector<int> chosen_neighbours_;
  std::vector<int> chosen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SparseSetResult find_sparse_independent_set(const Graph& g, int m, int k,
                                            const SparseSetOptions& options) {
  if (m < 1) throw InvalidArgument("sparse independent set size must be at least 1");
  if (k < 2) throw InvalidArgument("common-neighbour arity must be at least 2");
  return SparseSetSearch(g, m, k, options).run();
}

}  // namespace tcover
