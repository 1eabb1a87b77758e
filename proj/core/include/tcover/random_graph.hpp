#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcover/coloured_graph.hpp"

namespace tcover {

struct RandomModel {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

struct SampledGraph {
  Graph graph;
  RandomModel model;
  std::string generator;
};

/// G(n, p): the pair {u, v}, u < v, is present iff draw number u*n + v of the
/// counter generator keyed by `seed` falls below p. Identical models give identical
/// graphs no matter how the pairs are visited.
SampledGraph sample_gnp(const RandomModel& model);

/// Colours every edge uniformly at random from 1..r using the counter generator
/// keyed by `seed` (draw number = edge index in sorted order).
ColouredGraph random_colouring(const Graph& g, int r, std::uint64_t seed);

enum class SearchStatus {
  Found,
  NotFound,         // search space exhausted: no such set exists
  BudgetExhausted,  // gave up; says nothing about existence
};

const char* to_string(SearchStatus status);

struct SparseSetOptions {
  std::uint64_t node_budget = 200'000;
  /// Ignore the budget and run to completion.
  bool exhaustive = false;
};

struct SparseSetResult {
  SearchStatus status = SearchStatus::NotFound;
  std::vector<int> vertices;  // ascending; set iff Found
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::Found; }
};

/// Independent set S with |S| = m such that no k vertices of S have a common
/// neighbour. Depth-first search over ascending vertex ids; each vertex tried as an
/// extension counts as one node against the budget.
SparseSetResult find_sparse_independent_set(const Graph& g, int m, int k,
                                            const SparseSetOptions& options = {});

}  // namespace tcover
