#pragma once

#include <string>
#include <vector>

#include "tcover/coloured_graph.hpp"
#include "tcover/hypergraph.hpp"

namespace tcover::fixtures {

/// Parts {r1,r2}, {b1,b2}, {g1,g2}; edges r1b1g2, r1b2g1, r2b1g1, r2b2g2.
PartiteHypergraph h_star();

/// `count` pairwise disjoint edges (i, i, ..., i) in parts of size `count`.
PartiteHypergraph disjoint_edges(int r, int count);

/// Four pairwise disjoint edges in parts of size 4:
/// (1,3,3), (3,1,4), (4,4,1), (2,2,2).
PartiteHypergraph ems();

/// Its fixed covers (1,1,1), (1,1,2), (1,2,1), (2,1,1): pairwise intersecting, and
/// every three of the four edges above are covered by one of them.
PartiteHypergraph ems_covers();

/// ems() with ems_covers() added as edges: 8 edges, cover number 4.
PartiteHypergraph ems_augmented();

/// Eight vertices x1..x4 = 0..3, y1..y4 = 4..7, colours red = 1, blue = 2,
/// green = 3.
ColouredGraph coloured8();

/// "x1".."x4", "y1".."y4".
std::string coloured8_vertex_name(int v);

}  // namespace tcover::fixtures
