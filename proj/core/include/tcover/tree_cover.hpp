#pragma once

#include <cstdint>
#include <vector>

#include "tcover/coloured_graph.hpp"
#include "tcover/components.hpp"

namespace tcover {

/// Minimum family of monochromatic components whose union is V(G), for one
/// fixed colouring.
struct ComponentCover {
  int size = 0;
  std::vector<ComponentRef> components;  // sorted
};

/// Exact minimum number of monochromatic components covering V(G) under the
/// colouring carried by `g`, with one optimal family.
///
/// Solved as set cover over the deduplicated component family (a vertex set that is
/// a component in several colours is kept once, under its lowest colour) by
/// branch-and-bound: greedy incumbent, lower bound from a greedy packing of vertices
/// that pairwise share no component, branching on the uncovered vertex that lies in
/// the fewest candidate components.
ComponentCover tree_cover_number(const ColouredGraph& g);

struct TcOptions {
  /// Largest number of colourings tc_exact may enumerate.
  std::uint64_t max_colourings = std::uint64_t{1} << 24;
  int threads = 1;
};

/// max over all r-colourings of tree_cover_number, i.e. tc_r(G) exactly.
///
/// The colour of the first edge is fixed to 1: tree_cover_number is invariant under
/// permuting colour names, and any colouring can be renamed so that edge 0 gets
/// colour 1. Throws BudgetExceeded when r^(|E|-1) exceeds `max_colourings`.
int tc_exact(const Graph& g, int r, const TcOptions& options = {});

}  // namespace tcover
