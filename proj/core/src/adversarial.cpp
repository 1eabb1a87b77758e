#include "tcover/adversarial.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "tcover/components.hpp"
#include "tcover/error.hpp"

namespace tcover {

std::optional<std::pair<int, int>> incompatible_edge(const Graph& g, const EdgeAssignment& ea) {
  for (auto [u, v] : g.edges())
    if (!intersects(ea.image(u), ea.image(v))) return std::make_pair(u, v);
  return std::nullopt;
}

bool is_surjective(const EdgeAssignment& ea) {
  std::vector<bool> hit(ea.target.edge_count(), false);
  for (int id : ea.map) hit.at(id) = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

ColouredGraph build_colouring(const Graph& g, const EdgeAssignment& ea) {
  if (static_cast<int>(ea.map.size()) != g.n()) throw InvalidArgument("assignment is not total on V(G)");
  std::vector<ColouredEdge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) {
    const auto& a = ea.image(u);
    const auto& b = ea.image(v);
    int colour = 0;
    for (int j = 0; j < ea.target.r() && colour == 0; ++j)
      if (a[j] == b[j]) colour = j + 1;
    if (colour == 0) throw IncompatibleAssignment(u, v);
    edges.push_back({u, v, colour});
  }
  return ColouredGraph(g.n(), ea.target.r(), std::move(edges));
}

void to_json(nlohmann::json& j, const LowerBoundReport& report) {
  j = {{"tau_target", report.target_cover.size},
       {"target_cover", report.target_cover.certificate},
       {"exact_checked", report.exact_checked},
       {"refinement_holds", report.refinement_holds},
       {"pairs_checked", report.pairs_checked},
       {"bound_holds", report.bound_holds()}};
  if (report.exact_checked) {
    auto comps = nlohmann::json::array();
    for (const auto& c : report.tree_cover.components) comps.push_back({{"colour", c.colour}, {"id", c.id}});
    j["tree_cover_number"] = report.tree_cover.size;
    j["tree_cover"] = std::move(comps);
  }
}

LowerBoundReport verify_lower_bound(const Graph& g, const EdgeAssignment& ea, int exact_limit) {
  if (!is_surjective(ea)) throw PreconditionViolated("surjective", "some target edge has no preimage");
  LowerBoundReport report;
  report.colouring = build_colouring(g, ea);
  const auto comps = components(report.colouring);
  const int n = g.n();
  for (int j = 1; j <= ea.target.r(); ++j) {
    const auto& part = comps.colour(j);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        ++report.pairs_checked;
        if (part.component_of[u] == part.component_of[v] && ea.image(u)[j - 1] != ea.image(v)[j - 1])
          throw RefinementViolation("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                    " share a colour-" + std::to_string(j) + " component but their images differ there");
      }
  }
  report.target_cover = tau(ea.target);
  if (n <= exact_limit) {
    report.exact_checked = true;
    report.tree_cover = tree_cover_number(report.colouring);
  }
  return report;
}

PartiteHypergraph assignment_target(const PartiteHypergraph& h0, const CoverFamily& family) {
  if (family.mode == CoverMode::Strict) return h0;
  return h0.with_edges(family.family);
}

EdgeAssignment build_ed0_from_independent_set(const Graph& g, const PartiteHypergraph& h0,
                                              std::span<const int> i_set, const CoverFamily& family,
                                              int k) {
  EdgeAssignment ea;
  ea.target = assignment_target(h0, family);
  const int m = ea.target.edge_count();

  const std::set<int> members(i_set.begin(), i_set.end());
  if (static_cast<int>(i_set.size()) != m || static_cast<int>(members.size()) != m)
    throw PreconditionViolated("size", std::to_string(i_set.size()) + " vertices for " + std::to_string(m) + " target edges");
  for (int v : i_set)
    if (v < 0 || v >= g.n()) throw PreconditionViolated("size", "vertex " + std::to_string(v) + " out of range");
  for (int v : i_set)
    for (int w : g.neighbours(v))
      if (members.count(w))
        throw PreconditionViolated("independent", "edge " + std::to_string(std::min(v, w)) + "-" + std::to_string(std::max(v, w)));

  std::vector<std::vector<int>> in_set_neighbours(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int w : g.neighbours(u))
      if (members.count(w)) in_set_neighbours[u].push_back(w);
    if (static_cast<int>(in_set_neighbours[u].size()) > k)
      throw PreconditionViolated("common-neighbour", "vertex " + std::to_string(u) + " has " +
                                                         std::to_string(in_set_neighbours[u].size()) + " neighbours in the set");
  }

  CoverFamily oracle{ea.target, k, family.family, CoverMode::Strict};
  std::sort(oracle.family.begin(), oracle.family.end());
  const auto check = check_cover_family(oracle);
  if (!check.ok) throw PreconditionViolated("cover-family", check.message());

  std::vector<int> slot(g.n(), -1);
  for (int i = 0; i < m; ++i) slot[i_set[i]] = i;
  ea.map.assign(g.n(), -1);
  std::vector<Edge> tuple;
  for (int u = 0; u < g.n(); ++u) {
    if (slot[u] >= 0) {
      ea.map[u] = slot[u];
      continue;
    }
    tuple.clear();
    for (int w : in_set_neighbours[u]) tuple.push_back(ea.target.edge(slot[w]));
    const Edge* cover = phi(oracle, tuple);
    if (cover == nullptr) throw PreconditionViolated("cover-family", "no member covers the neighbours of vertex " + std::to_string(u));
    ea.map[u] = ea.target.find(*cover);
  }
  ea.lower_bound_ready = true;
  return ea;
}

bool IntersectionGraph::complete() const {
  for (const auto& row : adjacent)
    if (!std::all_of(row.begin(), row.end(), [](bool b) { return b; })) return false;
  return true;
}

IntersectionGraph intersection_graph(const PartiteHypergraph& h) {
  IntersectionGraph f;
  f.n = h.edge_count();
  f.adjacent.assign(f.n, std::vector<bool>(f.n, false));
  for (int a = 0; a < f.n; ++a)
    for (int b = 0; b < f.n; ++b) f.adjacent[a][b] = intersects(h.edge(a), h.edge(b));
  return f;
}

bool check_surjective_homomorphism(const Graph& g, const IntersectionGraph& f, std::span<const int> map) {
  if (static_cast<int>(map.size()) != g.n()) return false;
  std::vector<bool> hit(f.n, false);
  for (int x : map) {
    if (x < 0 || x >= f.n) return false;
    hit[x] = true;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return false;
  for (auto [u, v] : g.edges())
    if (!f.adjacent[map[u]][map[v]]) return false;
  return true;
}

}  // namespace tcover
