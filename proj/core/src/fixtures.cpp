#include "tcover/fixtures.hpp"

#include <algorithm>

namespace tcover::fixtures {

namespace {

PartiteHypergraph one_based(std::vector<int> sizes, std::vector<Edge> edges) {
  for (auto& e : edges)
    for (auto& x : e) --x;
  return PartiteHypergraph(std::move(sizes), std::move(edges));
}

}  // namespace

PartiteHypergraph h_star() {
  return one_based({2, 2, 2}, {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {2, 2, 2}});
}

PartiteHypergraph disjoint_edges(int r, int count) {
  std::vector<Edge> edges;
  for (int i = 0; i < count; ++i) edges.push_back(Edge(r, i));
  return PartiteHypergraph(std::vector<int>(r, std::max(count, 1)), std::move(edges));
}

PartiteHypergraph ems() {
  return one_based({4, 4, 4}, {{1, 3, 3}, {3, 1, 4}, {4, 4, 1}, {2, 2, 2}});
}

PartiteHypergraph ems_covers() {
  return one_based({4, 4, 4}, {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
}

PartiteHypergraph ems_augmented() { return ems().with_edges(ems_covers().edges()); }

ColouredGraph coloured8() {
  constexpr int x1 = 0, x2 = 1, x3 = 2, x4 = 3, y1 = 4, y2 = 5, y3 = 6, y4 = 7;
  constexpr int red = 1, blue = 2, green = 3;
  return ColouredGraph(8, 3,
                       {
                           {x4, y1, red}, {x4, y2, red}, {x4, y3, red},
                           {x1, y4, red}, {y2, y3, red}, {y1, y3, red},
                           {x3, y4, blue}, {x3, y2, blue}, {x3, y1, blue},
                           {x1, y3, blue}, {y1, y2, blue}, {y2, y4, blue},
                           {x2, y4, green}, {x2, y3, green}, {x2, y1, green},
                           {x1, y2, green}, {y4, y3, green}, {y1, y4, green},
                       });
}

std::string coloured8_vertex_name(int v) {
  return (v < 4 ? "x" : "y") + std::to_string(v % 4 + 1);
}

}  // namespace tcover::fixtures
