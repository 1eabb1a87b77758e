#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace tcover {

/// Undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  using EdgeList = std::vector<std::pair<int, int>>;

  Graph() = default;

  /// Normalizes every pair to u < v and sorts. Throws InvalidArgument on self-loops,
  /// repeated pairs or out-of-range endpoints.
  Graph(int n, EdgeList edges);

  static Graph complete(int n);

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const EdgeList& edges() const { return edges_; }

  std::span<const int> neighbours(int v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  EdgeList edges_;
  std::vector<int> offsets_{0};
  std::vector<int> adjacency_;
};

struct ColouredEdge {
  int u;
  int v;
  int colour;

  auto operator<=>(const ColouredEdge&) const = default;
};

/// A graph together with an r-colouring of its edges; colours are 1..r.
class ColouredGraph {
 public:
  ColouredGraph() = default;

  /// Throws InvalidArgument if the invariants fail: u != v, each unordered pair at
  /// most once (regardless of colour), colour in 1..r.
  ColouredGraph(int n, int r, std::vector<ColouredEdge> edges);

  /// Colours every edge of `g` with `colour`.
  static ColouredGraph monochromatic(const Graph& g, int r, int colour = 1);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<ColouredEdge>& edges() const { return edges_; }

  Graph uncoloured() const;

  /// Same vertex set, every edge of colour `colour` deleted.
  ColouredGraph without_colour(int colour) const;

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  int n_ = 0;
  int r_ = 1;
  std::vector<ColouredEdge> edges_;
};

/// Raw contents of a .cg file: first line `n r`, then `u v colour` per edge with
/// 0-based vertices and 1-based colours; colour 0 marks an uncoloured graph.
struct CgFile {
  int n = 0;
  int r = 0;
  std::vector<ColouredEdge> edges;

  bool is_uncoloured() const;
  Graph to_graph() const;
  ColouredGraph to_coloured() const;
};

CgFile read_cg(std::istream& in);
CgFile read_cg_file(const std::string& path);

void write_cg(std::ostream& out, const ColouredGraph& g);
/// Uncoloured form: colour column 0.
void write_cg(std::ostream& out, const Graph& g, int r = 0);

void to_json(nlohmann::json& j, const ColouredGraph& g);
void to_json(nlohmann::json& j, const Graph& g);

}  // namespace tcover
