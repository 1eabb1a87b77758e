#include "tcover/coloured_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tcover/error.hpp"

namespace tcover {

namespace {

std::string pair_text(int u, int v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

void check_endpoints(int n, int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InvalidArgument("edge " + pair_text(u, v) + " out of range for n=" +
                          std::to_string(n));
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
}

}  // namespace

Graph::Graph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  for (auto& [u, v] : edges_) {
    check_endpoints(n, u, v);
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidArgument("parallel edge " + pair_text(dup->first, dup->second));
  }

  std::vector<int> degree(n, 0);
  for (auto [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
  }
}

Graph Graph::complete(int n) {
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

bool Graph::adjacent(int u, int v) const {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

ColouredGraph::ColouredGraph(int n, int r, std::vector<ColouredEdge> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  if (r < 1) throw InvalidArgument("colour count must be at least 1");
  for (auto& e : edges_) {
    check_endpoints(n, e.u, e.v);
    if (e.colour < 1 || e.colour > r) {
      throw InvalidArgument("edge " + pair_text(e.u, e.v) + " has colour " +
                            std::to_string(e.colour) + " outside 1.." + std::to_string(r));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw InvalidArgument("parallel edge " + pair_text(edges_[i].u, edges_[i].v));
    }
  }
}

ColouredGraph ColouredGraph::monochromatic(const Graph& g, int r, int colour) {
  std::vector<ColouredEdge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.push_back({u, v, colour});
  return ColouredGraph(g.n(), r, std::move(edges));
}

Graph ColouredGraph::uncoloured() const {
  Graph::EdgeList pairs;
  pairs.reserve(edges_.size());
  for (const auto& e : edges_) pairs.emplace_back(e.u, e.v);
  return Graph(n_, std::move(pairs));
}

ColouredGraph ColouredGraph::without_colour(int colour) const {
  std::vector<ColouredEdge> kept;
  for (const auto& e : edges_)
    if (e.colour != colour) kept.push_back(e);
  return ColouredGraph(n_, r_, std::move(kept));
}

bool CgFile::is_uncoloured() const {
  return std::all_of(edges.begin(), edges.end(), [](const auto& e) { return e.colour == 0; });
}

Graph CgFile::to_graph() const {
  Graph::EdgeList pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
  return Graph(n, std::move(pairs));
}

ColouredGraph CgFile::to_coloured() const {
  if (!edges.empty() && is_uncoloured()) {
    throw ParseError(".cg graph is uncoloured (colour column 0)");
  }
  return ColouredGraph(n, r, edges);
}

CgFile read_cg(std::istream& in) {
  CgFile file;
  std::string line;
  bool have_header = false;
  int line_no = 0;
  bool seen_zero = false;
  bool seen_colour = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    auto fail = [&](const std::string& what) {
      throw ParseError(".cg line " + std::to_string(line_no) + ": " + what);
    };
    if (!have_header) {
      if (!(fields >> file.n >> file.r)) fail("expected `n r`");
      if (file.n < 0 || file.r < 0) fail("negative header value");
      have_header = true;
    } else {
      ColouredEdge e{};
      if (!(fields >> e.u >> e.v >> e.colour)) fail("expected `u v colour`");
      (e.colour == 0 ? seen_zero : seen_colour) = true;
      file.edges.push_back(e);
    }
    std::string extra;
    if (fields >> extra) fail("trailing token `" + extra + "`");
  }
  if (!have_header) throw ParseError(".cg input has no header line");
  if (seen_zero && seen_colour) throw ParseError(".cg mixes coloured and uncoloured edges");
  return file;
}

CgFile read_cg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_cg(in);
}

void write_cg(std::ostream& out, const ColouredGraph& g) {
  out << g.n() << ' ' << g.r() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.colour << '\n';
}

void write_cg(std::ostream& out, const Graph& g, int r) {
  out << g.n() << ' ' << r << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << " 0\n";
}

void to_json(nlohmann::json& j, const ColouredGraph& g) {
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.colour});
  j = {{"n", g.n()}, {"r", g.r()}, {"edges", std::move(edges)}};
}

void to_json(nlohmann::json& j, const Graph& g) {
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j = {{"n", g.n()}, {"edges", std::move(edges)}};
}

}  // namespace tcover
