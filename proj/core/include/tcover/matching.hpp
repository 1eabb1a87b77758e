#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tcover/hypergraph.hpp"

namespace tcover {

/// Maximum bipartite matching between {0..left-1} and {0..right-1} by augmenting
/// paths. Returns the matched pairs sorted by left end.
std::vector<std::pair<int, int>> bipartite_matching(int left, int right,
                                                    std::span<const std::pair<int, int>> edges);

/// Minimum vertex cover of the same bipartite graph, read off a maximum matching
/// (König). First: left vertices, second: right vertices. Sizes sum to the
/// matching size.
std::pair<std::vector<int>, std::vector<int>> bipartite_vertex_cover(
    int left, int right, std::span<const std::pair<int, int>> edges);

/// Maximum set of pairwise disjoint edges, as edge ids in increasing order.
/// Augmenting paths for r = 2, branch-and-bound set packing for r >= 3.
std::vector<int> max_matching_ids(const PartiteHypergraph& h);
std::vector<Edge> max_matching(const PartiteHypergraph& h);

/// For r = 3: tau(h) - |t_set| edges avoiding t_set that pairwise meet only inside
/// part `a_part`. Edges avoiding t_set are projected onto the two other parts; a
/// maximum matching of that bipartite graph has at least tau(h) - |t_set| edges,
/// since t_set plus a cover of the projection covers h. Each matched pair is lifted
/// to its lowest-id preimage. Throws InfeasibleArity when r != 3.
std::vector<Edge> skew_matching(const PartiteHypergraph& h, std::span<const Vertex> t_set,
                                int a_part);

}  // namespace tcover
