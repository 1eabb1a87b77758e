#include "tcover/classify.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "tcover/error.hpp"
#include "tcover/fixtures.hpp"

namespace tcover {

const char* to_string(IntersectingCase c) {
  switch (c) {
    case IntersectingCase::CommonVertex: return "common-vertex";
    case IntersectingCase::TwoOfThree: return "two-of-three";
    case IntersectingCase::IsomorphicHStar: return "isomorphic-h-star";
  }
  return "?";
}

void to_json(nlohmann::json& j, const Classification& c) {
  j = {{"case", to_string(c.kind)}};
  switch (c.kind) {
    case IntersectingCase::CommonVertex:
      j["vertex"] = to_string(c.common, 3);
      break;
    case IntersectingCase::TwoOfThree:
      j["core"] = {to_string(c.core[0], 3), to_string(c.core[1], 3), to_string(c.core[2], 3)};
      break;
    case IntersectingCase::IsomorphicHStar: {
      auto map = nlohmann::json::object();
      for (int p = 0; p < 3; ++p)
        for (int i = 0; i < 2; ++i)
          map[to_string(Vertex{p, i}, 3)] = to_string(Vertex{p, c.isomorphism[p][i]}, 3);
      j["isomorphism"] = std::move(map);
      break;
    }
  }
}

namespace {

bool common_vertex(const PartiteHypergraph& h, Vertex& out) {
  for (int p = 0; p < 3; ++p)
    for (int i = 0; i < h.part_size(p); ++i) {
      const Vertex v{p, i};
      if (std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) { return contains(e, v); })) {
        out = v;
        return true;
      }
    }
  return false;
}

bool two_of_three(const PartiteHypergraph& h, std::array<Vertex, 3>& out) {
  for (int a = 0; a < h.part_size(0); ++a)
    for (int b = 0; b < h.part_size(1); ++b)
      for (int g = 0; g < h.part_size(2); ++g) {
        const Edge core{a, b, g};
        const bool ok = std::all_of(h.edges().begin(), h.edges().end(), [&](const Edge& e) {
          int shared = 0;
          for (int p = 0; p < 3; ++p) shared += e[p] == core[p];
          return shared >= 2;
        });
        if (ok) {
          out = {Vertex{0, a}, Vertex{1, b}, Vertex{2, g}};
          return true;
        }
      }
  return false;
}

bool copy_of_h_star(const PartiteHypergraph& h, std::array<std::array<int, 2>, 3>& out) {
  const auto star = fixtures::h_star();
  if (h.edge_count() != star.edge_count()) return false;
  std::array<std::vector<int>, 3> used;
  for (int p = 0; p < 3; ++p) {
    for (const auto& e : h.edges()) used[p].push_back(e[p]);
    std::sort(used[p].begin(), used[p].end());
    used[p].erase(std::unique(used[p].begin(), used[p].end()), used[p].end());
    if (used[p].size() != 2) return false;
  }
  // Every part-preserving bijection between H*'s vertices and the used vertices.
  for (int mask = 0; mask < 8; ++mask) {
    std::array<std::array<int, 2>, 3> map{};
    for (int p = 0; p < 3; ++p) {
      const bool swap = (mask >> p) & 1;
      map[p] = {used[p][swap ? 1 : 0], used[p][swap ? 0 : 1]};
    }
    std::vector<Edge> image;
    for (const auto& e : star.edges()) image.push_back({map[0][e[0]], map[1][e[1]], map[2][e[2]]});
    std::sort(image.begin(), image.end());
    if (image == h.edges()) {
      out = map;
      return true;
    }
  }
  return false;
}

}  // namespace

Classification classify_intersecting_3graph(const PartiteHypergraph& h) {
  if (h.r() != 3) throw InvalidArgument("classifier needs a 3-partite hypergraph");
  for (int a = 0; a < h.edge_count(); ++a)
    for (int b = a + 1; b < h.edge_count(); ++b)
      if (!intersects(h.edge(a), h.edge(b)))
        throw PreconditionViolated("pairwise-intersecting", to_string(h.edge(a)) + " and " + to_string(h.edge(b)) + " are disjoint");

  Classification c;
  if (h.empty() || common_vertex(h, c.common)) {
    c.kind = IntersectingCase::CommonVertex;
    return c;
  }
  if (two_of_three(h, c.core)) {
    c.kind = IntersectingCase::TwoOfThree;
    return c;
  }
  if (copy_of_h_star(h, c.isomorphism)) {
    c.kind = IntersectingCase::IsomorphicHStar;
    return c;
  }
  throw InternalError("intersecting 3-graph matches none of the three cases:\n" + to_hg_string(h));
}

}  // namespace tcover
