#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tcover/hypergraph.hpp"

namespace tcover {

/// Structure of a pairwise-intersecting 3-partite 3-graph: (a) a vertex common to
/// all edges; (b) vertices r, b, g, one per part, with every edge containing at
/// least two of them; (c) a copy of the fixture H* plus isolated vertices.
enum class IntersectingCase { CommonVertex, TwoOfThree, IsomorphicHStar };

const char* to_string(IntersectingCase c);

struct Classification {
  IntersectingCase kind = IntersectingCase::CommonVertex;
  Vertex common{0, 0};                  // case (a)
  std::array<Vertex, 3> core{};         // case (b): r, b, g
  /// Case (c): for each part, the vertex of h mapped to H*'s vertex 1 and 2 of that
  /// part, so h's edges are exactly the images of H*'s edges.
  std::array<std::array<int, 2>, 3> isomorphism{};
};

void to_json(nlohmann::json& j, const Classification& c);

/// First applicable case in the order a, b, c. An edgeless hypergraph is case (a)
/// with vertex r1. Throws PreconditionViolated (with a disjoint pair) when the edges
/// do not pairwise intersect, InvalidArgument when r != 3, and InternalError when no
/// case applies.
Classification classify_intersecting_3graph(const PartiteHypergraph& h);

}  // namespace tcover
