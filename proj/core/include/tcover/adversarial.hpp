#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tcover/coloured_graph.hpp"
#include "tcover/cover_family.hpp"
#include "tcover/hypergraph.hpp"
#include "tcover/tree_cover.hpp"
#include "tcover/vertex_cover.hpp"

namespace tcover {

/// A map from graph vertices to edges of a target hypergraph H_0.
struct EdgeAssignment {
  PartiteHypergraph target;
  std::vector<int> map;  // vertex -> edge id in target
  /// Set by constructions that guarantee surjectivity and edge compatibility.
  bool lower_bound_ready = false;

  const Edge& image(int u) const { return target.edge(map.at(u)); }
};

/// First graph edge whose ends map to disjoint hyperedges.
std::optional<std::pair<int, int>> incompatible_edge(const Graph& g, const EdgeAssignment& ea);
bool is_surjective(const EdgeAssignment& ea);

/// Colours uv with the lowest j such that map(u) and map(v) agree in part j.
/// Throws IncompatibleAssignment naming the first edge with disjoint images.
ColouredGraph build_colouring(const Graph& g, const EdgeAssignment& ea);

struct LowerBoundReport {
  ColouredGraph colouring;
  TauResult target_cover;         // tau(H_0)
  bool exact_checked = false;     // tree_cover_number computed (n <= exact_limit)
  ComponentCover tree_cover;      // valid when exact_checked
  bool refinement_holds = true;   // always true on return; a failure throws
  std::uint64_t pairs_checked = 0;

  int bound() const { return target_cover.size; }
  bool bound_holds() const { return !exact_checked || tree_cover.size >= target_cover.size; }
};

void to_json(nlohmann::json& j, const LowerBoundReport& report);

/// Colours g via build_colouring, then checks for all vertex pairs u, v and colours j
/// that u, v in one colour-j component implies map(u), map(v) agree in part j, and,
/// for n <= exact_limit, computes the exact tree cover number to compare with
/// tau(H_0). Throws PreconditionViolated when the map is not surjective,
/// IncompatibleAssignment as build_colouring, RefinementViolation when the implication
/// fails (a library bug).
LowerBoundReport verify_lower_bound(const Graph& g, const EdgeAssignment& ea, int exact_limit = 64);

/// Builds the assignment of the lower-bound construction: the i-th vertex of i_set
/// gets the i-th edge of the target, any other vertex u gets phi of the edges on its
/// neighbours in i_set. The target is h0 itself for a strict family and h0 plus the
/// family's members for an augmented one.
/// Preconditions, each reported as PreconditionViolated(which, witness):
///   "size"             |i_set| = |E(target)|, distinct vertices of g
///   "independent"      no edge of g inside i_set
///   "common-neighbour" no k+1 vertices of i_set have a common neighbour
///   "cover-family"     the family pairwise intersects and covers all k-tuples of target
EdgeAssignment build_ed0_from_independent_set(const Graph& g, const PartiteHypergraph& h0,
                                              std::span<const int> i_set, const CoverFamily& family,
                                              int k);

/// Edge set of the target that build_ed0_from_independent_set uses.
PartiteHypergraph assignment_target(const PartiteHypergraph& h0, const CoverFamily& family);

/// Graph on the edges of h: adjacency is intersection, every vertex has a loop.
struct IntersectionGraph {
  int n = 0;
  std::vector<std::vector<bool>> adjacent;  // adjacent[a][a] is the loop

  bool has_loop(int a) const { return adjacent[a][a]; }
  bool complete() const;
};

IntersectionGraph intersection_graph(const PartiteHypergraph& h);

/// True iff `map` sends every edge of g to an edge (or loop) of f and hits every
/// vertex of f. An assignment is ready for the lower bound exactly when its map is a
/// surjective homomorphism into the intersection graph of its target.
bool check_surjective_homomorphism(const Graph& g, const IntersectionGraph& f, std::span<const int> map);

}  // namespace tcover
