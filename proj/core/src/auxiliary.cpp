#include "tcover/auxiliary.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

#include "tcover/error.hpp"

namespace tcover {

ComponentRef AuxiliaryMap::component_at(Vertex v) const {
  if (is_star(v)) throw InvalidArgument("star vertex has no single component");
  const auto& table = vt.at(v.part);
  for (int id = 0; id < static_cast<int>(table.size()); ++id)
    if (table[id] == v.index) return {v.part + 1, id};
  throw InvalidArgument("vertex is not in the auxiliary hypergraph");
}

std::vector<int> AuxiliaryMap::preimage(int id) const {
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(ed.size()); ++u)
    if (ed[u] == id) out.push_back(u);
  return out;
}

AuxiliaryMap build_auxiliary(const ColouredGraph& g, std::span<const int> w) {
  AuxiliaryMap am;
  am.host = g;
  am.witness.assign(w.begin(), w.end());
  std::sort(am.witness.begin(), am.witness.end());
  am.witness.erase(std::unique(am.witness.begin(), am.witness.end()), am.witness.end());
  for (int u : am.witness)
    if (u < 0 || u >= g.n()) throw InvalidArgument("witness vertex " + std::to_string(u) + " out of range");
  am.components = components(g);

  const int r = g.r();
  std::vector<int> sizes(r);
  am.vt.resize(r);
  for (int i = 0; i < r; ++i) {
    const auto& part = am.components.colour(i + 1);
    std::vector<bool> meets(part.size(), false);
    for (int u : am.witness) meets[part.component_of[u]] = true;
    int next = 0;
    am.vt[i].assign(part.size(), -1);
    for (int id = 0; id < part.size(); ++id)
      if (meets[id]) am.vt[i][id] = next++;
    for (auto& x : am.vt[i])
      if (x < 0) x = next;  // collapsed to the star
    sizes[i] = next + 1;
    am.stars.push_back({i, next});
  }

  std::vector<Edge> images(g.n(), Edge(r));
  for (int u = 0; u < g.n(); ++u)
    for (int i = 0; i < r; ++i) images[u][i] = am.vt[i][am.components.component(i + 1, u)];
  am.hypergraph = PartiteHypergraph::from_edges_dedup(sizes, images);
  am.ed.resize(g.n());
  for (int u = 0; u < g.n(); ++u) am.ed[u] = am.hypergraph.find(images[u]);
  return am;
}

AuxiliaryMap build_auxiliary(const ColouredGraph& g) {
  std::vector<int> all(g.n());
  for (int u = 0; u < g.n(); ++u) all[u] = u;
  return build_auxiliary(g, all);
}

namespace {

void require_full(const AuxiliaryMap& am) {
  if (!am.full_witness()) throw InvalidArgument("operation needs the auxiliary map with W = V(G)");
}

CoverCertificate normalized(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return {std::move(vertices), Verification::Unverified};
}

}  // namespace

CoverCertificate covers_graph_to_hyper(const AuxiliaryMap& am, std::span<const ComponentRef> family) {
  require_full(am);
  for (const auto& c : family)
    if (c.colour < 1 || c.colour > am.r() || c.id < 0 || c.id >= am.components.colour(c.colour).size())
      throw InvalidArgument("component reference out of range");
  if (!covers_all_vertices(am.components, am.host.n(), family))
    throw InputNotACover("component family does not cover V(G)");
  std::vector<Vertex> vertices;
  for (const auto& c : family) vertices.push_back(am.vertex_of(c));
  auto cert = verify(am.hypergraph, normalized(std::move(vertices)));
  if (cert.verified != Verification::Valid) throw InternalError("image of a component cover is not a cover");
  return cert;
}

std::vector<ComponentRef> covers_hyper_to_graph(const AuxiliaryMap& am, const CoverCertificate& cert) {
  require_full(am);
  if (!is_cover(am.hypergraph, cert.vertices)) throw InputNotACover("certificate misses a hyperedge");
  std::vector<ComponentRef> family;
  for (const auto& v : cert.vertices)
    if (!am.is_star(v)) family.push_back(am.component_at(v));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (!covers_all_vertices(am.components, am.host.n(), family))
    throw InternalError("preimage of a hypergraph cover misses a graph vertex");
  return family;
}

CoverCertificate collapse_cover(const AuxiliaryMap& am_full, const AuxiliaryMap& am_w,
                                const CoverCertificate& cert) {
  require_full(am_full);
  if (!(am_full.host == am_w.host)) throw InvalidArgument("auxiliary maps built from different graphs");
  if (!is_cover(am_full.hypergraph, cert.vertices)) throw InputNotACover("certificate misses a hyperedge");
  std::vector<Vertex> image;
  for (const auto& v : cert.vertices) {
    if (am_full.is_star(v)) {
      image.push_back(am_w.stars[v.part]);
    } else {
      image.push_back(am_w.vertex_of(am_full.component_at(v)));
    }
  }
  auto out = verify(am_w.hypergraph, normalized(std::move(image)));
  if (out.verified != Verification::Valid) throw InternalError("collapsed certificate is not a cover");
  return out;
}

std::vector<int> witness_set(const ColouredGraph& g, int s) {
  const auto am = build_auxiliary(g);
  std::vector<int> w;
  for (int id : critical_edge_ids(am.hypergraph, s)) w.push_back(am.preimage(id).front());
  std::sort(w.begin(), w.end());
  return w;
}

FrequentEdge most_frequent_edge(const AuxiliaryMap& am, std::span<const int> a_set) {
  if (a_set.empty()) throw InvalidArgument("most_frequent_edge needs a nonempty vertex set");
  std::vector<int> count(am.hypergraph.edge_count(), 0);
  for (int u : a_set) ++count.at(am.ed.at(u));
  FrequentEdge best;
  for (int id = 0; id < static_cast<int>(count.size()); ++id) {
    if (count[id] > best.multiplicity) {
      best.edge_id = id;
      best.multiplicity = count[id];
    }
  }
  best.edge = am.hypergraph.edge(best.edge_id);
  best.guaranteed = static_cast<double>(a_set.size()) /
                    std::pow(static_cast<double>(am.witness.size() + 1), am.r());
  return best;
}

std::optional<std::pair<int, int>> disjoint_graph_edge(const AuxiliaryMap& am) {
  for (const auto& e : am.host.edges())
    if (!intersects(am.edge_of(e.u), am.edge_of(e.v))) return std::make_pair(e.u, e.v);
  return std::nullopt;
}

void to_json(nlohmann::json& j, const AuxiliaryMap& am) {
  auto ed = nlohmann::json::array();
  for (int u = 0; u < am.host.n(); ++u) {
    auto row = nlohmann::json::array();
    for (int x : am.edge_of(u)) row.push_back(x + 1);
    ed.push_back({{"vertex", u}, {"edge", std::move(row)}});
  }
  auto vt = nlohmann::json::array();
  for (int i = 0; i < am.r(); ++i) {
    const auto& part = am.components.colour(i + 1);
    for (int id = 0; id < part.size(); ++id) {
      const Vertex v{i, am.vt[i][id]};
      vt.push_back({{"colour", i + 1},
                    {"component", part.members[id]},
                    {"vertex", v.index + 1},
                    {"star", am.is_star(v)}});
    }
  }
  auto stars = nlohmann::json::array();
  for (const auto& s : am.stars) stars.push_back(s);
  j = {{"host", am.host}, {"witness", am.witness}, {"hypergraph", am.hypergraph},
       {"ed", std::move(ed)}, {"vt", std::move(vt)}, {"stars", std::move(stars)}};
}

}  // namespace tcover
