#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace tcover {

/// Vertex `index` of part `part`; both 0-based.
struct Vertex {
  int part;
  int index;

  auto operator<=>(const Vertex&) const = default;
};

/// A transversal: entry i is the 0-based index of the edge's vertex in part i.
using Edge = std::vector<int>;

bool intersects(const Edge& a, const Edge& b);
bool contains(const Edge& e, Vertex v);

/// "(1,3,3)": 1-based indices, the .hg convention.
std::string to_string(const Edge& e);
/// "r1", "b2", "g1" for r = 3; "V4:2" style otherwise. 1-based.
std::string to_string(Vertex v, int r);

/// r-partite r-uniform hypergraph. Edges are kept sorted lexicographically, so an
/// edge id is its rank in that order.
class PartiteHypergraph {
 public:
  PartiteHypergraph() = default;

  /// Throws InvalidArgument when r < 2, a part is empty, an edge has the wrong
  /// length or an index out of range, or an edge is repeated.
  PartiteHypergraph(std::vector<int> part_sizes, std::vector<Edge> edges);

  /// Like the constructor but silently drops repeated edges.
  static PartiteHypergraph from_edges_dedup(std::vector<int> part_sizes, std::vector<Edge> edges);

  int r() const { return static_cast<int>(part_sizes_.size()); }
  const std::vector<int>& part_sizes() const { return part_sizes_; }
  int part_size(int i) const { return part_sizes_.at(i); }
  int vertex_count() const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return edges_.empty(); }

  /// Edge id of `e`, or -1.
  int find(const Edge& e) const;
  bool has_edge(const Edge& e) const { return find(e) >= 0; }

  /// Same parts, the given edge ids only.
  PartiteHypergraph subgraph(std::span<const int> edge_ids) const;
  /// Same parts, edges of this graph plus `extra` (duplicates dropped).
  PartiteHypergraph with_edges(std::span<const Edge> extra) const;

  /// Edges pairwise intersect (true for zero or one edge).
  bool pairwise_intersecting() const;
  /// Vertices lying in no edge.
  std::vector<Vertex> isolated_vertices() const;

  friend bool operator==(const PartiteHypergraph&, const PartiteHypergraph&) = default;

 private:
  std::vector<int> part_sizes_;
  std::vector<Edge> edges_;
};

/// .hg text: first line `r s_1 .. s_r`, then one edge per line as r 1-based indices.
PartiteHypergraph read_hg(std::istream& in);
PartiteHypergraph read_hg_file(const std::string& path);
PartiteHypergraph parse_hg(const std::string& text);
void write_hg(std::ostream& out, const PartiteHypergraph& h);
std::string to_hg_string(const PartiteHypergraph& h);

/// {"r": r, "part_sizes": [...], "edges": [[1-based,...], ...]}
void to_json(nlohmann::json& j, const PartiteHypergraph& h);
void from_json(const nlohmann::json& j, PartiteHypergraph& h);
void to_json(nlohmann::json& j, const Vertex& v);

}  // namespace tcover
