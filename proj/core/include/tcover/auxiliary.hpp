#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tcover/coloured_graph.hpp"
#include "tcover/components.hpp"
#include "tcover/hypergraph.hpp"
#include "tcover/vertex_cover.hpp"

namespace tcover {

/// The auxiliary r-partite hypergraph of a coloured graph G with respect to a
/// vertex subset W, with the maps ed (graph vertex -> hyperedge) and vt
/// (monochromatic component -> hypergraph vertex).
///
/// Part i (colour i+1) holds one vertex per colour-(i+1) component meeting W, in
/// order of the component's smallest vertex, followed by the star vertex, which
/// every component disjoint from W is sent to. ed(u) has in part i the vertex of
/// u's colour-(i+1) component. Hyperedges are the distinct ed images, sorted.
struct AuxiliaryMap {
  ColouredGraph host;
  std::vector<int> witness;  // W, sorted
  ComponentMap components;
  PartiteHypergraph hypergraph;
  std::vector<int> ed;                 // graph vertex -> edge id
  std::vector<std::vector<int>> vt;    // vt[i][component id] -> index in part i
  std::vector<Vertex> stars;           // stars[i] = last vertex of part i

  int r() const { return host.r(); }
  bool full_witness() const { return static_cast<int>(witness.size()) == host.n(); }
  const Edge& edge_of(int u) const { return hypergraph.edge(ed.at(u)); }
  Vertex vertex_of(ComponentRef c) const { return {c.colour - 1, vt.at(c.colour - 1).at(c.id)}; }
  bool is_star(Vertex v) const { return stars.at(v.part) == v; }
  /// Component behind a non-star vertex.
  ComponentRef component_at(Vertex v) const;
  /// Graph vertices u with ed(u) = edge `id`, ascending.
  std::vector<int> preimage(int id) const;
};

/// Throws InvalidArgument when `w` is not a subset of V(g).
AuxiliaryMap build_auxiliary(const ColouredGraph& g, std::span<const int> w);
/// W = V(G).
AuxiliaryMap build_auxiliary(const ColouredGraph& g);

/// Component cover of G -> hypergraph cover of the same size. Needs W = V.
/// Throws InputNotACover when the family misses a vertex of G.
CoverCertificate covers_graph_to_hyper(const AuxiliaryMap& am, std::span<const ComponentRef> family);

/// Hypergraph cover -> component cover of G of at most the same size (stars are
/// dropped). Needs W = V. Throws InputNotACover when `cert` misses an edge.
std::vector<ComponentRef> covers_hyper_to_graph(const AuxiliaryMap& am, const CoverCertificate& cert);

/// Cover of H(G,c) -> cover of H(G,W,c) of at most the same size: each vertex goes to
/// the vertex of the same component if that component meets W, else to the star of
/// its part. Throws InputNotACover when `cert` does not cover am_full.
CoverCertificate collapse_cover(const AuxiliaryMap& am_full, const AuxiliaryMap& am_w,
                                const CoverCertificate& cert);

/// W with |W| <= C(r-1+s, r) and tau(H(G,W,c)) >= s: a tau-critical subgraph of
/// H(G,c) (greedy deletion in edge order) and the lowest preimage of each of its
/// edges. Throws TargetUnreachable when tau(H(G,c)) < s.
std::vector<int> witness_set(const ColouredGraph& g, int s);

struct FrequentEdge {
  int edge_id = -1;
  Edge edge;
  int multiplicity = 0;
  double guaranteed = 0;  // |A| / (|W| + 1)^r
};

/// The edge hit most often by ed on `a_set`; ties go to the lexicographically
/// smallest edge. Throws InvalidArgument when `a_set` is empty.
FrequentEdge most_frequent_edge(const AuxiliaryMap& am, std::span<const int> a_set);

/// A graph edge uv with ed(u), ed(v) disjoint, if any (there never should be).
std::optional<std::pair<int, int>> disjoint_graph_edge(const AuxiliaryMap& am);

void to_json(nlohmann::json& j, const AuxiliaryMap& am);

}  // namespace tcover
