#include "tcover/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tcover/error.hpp"

namespace tcover {

bool intersects(const Edge& a, const Edge& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] == b[i]) return true;
  return false;
}

bool contains(const Edge& e, Vertex v) {
  return v.part >= 0 && v.part < static_cast<int>(e.size()) && e[v.part] == v.index;
}

std::string to_string(const Edge& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(e[i] + 1);
  }
  return out + ")";
}

std::string to_string(Vertex v, int r) {
  if (r == 3) return std::string(1, "rbg"[v.part]) + std::to_string(v.index + 1);
  return "V" + std::to_string(v.part + 1) + ":" + std::to_string(v.index + 1);
}

namespace {

void validate_edge(const std::vector<int>& sizes, const Edge& e) {
  if (e.size() != sizes.size())
    throw InvalidArgument("edge " + to_string(e) + " is not a transversal of " +
                          std::to_string(sizes.size()) + " parts");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] >= sizes[i])
      throw InvalidArgument("edge " + to_string(e) + " out of range in part " + std::to_string(i + 1));
}

void validate_parts(const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw InvalidArgument("a partite hypergraph needs at least 2 parts");
  for (int s : sizes)
    if (s < 1) throw InvalidArgument("part sizes must be positive");
}

}  // namespace

PartiteHypergraph::PartiteHypergraph(std::vector<int> part_sizes, std::vector<Edge> edges)
    : part_sizes_(std::move(part_sizes)), edges_(std::move(edges)) {
  validate_parts(part_sizes_);
  for (const auto& e : edges_) validate_edge(part_sizes_, e);
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw InvalidArgument("repeated edge " + to_string(*dup));
}

PartiteHypergraph PartiteHypergraph::from_edges_dedup(std::vector<int> part_sizes,
                                                      std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return PartiteHypergraph(std::move(part_sizes), std::move(edges));
}

int PartiteHypergraph::vertex_count() const {
  return std::accumulate(part_sizes_.begin(), part_sizes_.end(), 0);
}

int PartiteHypergraph::find(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

PartiteHypergraph PartiteHypergraph::subgraph(std::span<const int> edge_ids) const {
  std::vector<Edge> kept;
  kept.reserve(edge_ids.size());
  for (int id : edge_ids) kept.push_back(edge(id));
  return from_edges_dedup(part_sizes_, std::move(kept));
}

PartiteHypergraph PartiteHypergraph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return from_edges_dedup(part_sizes_, std::move(all));
}

bool PartiteHypergraph::pairwise_intersecting() const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = i + 1; j < edges_.size(); ++j)
      if (!intersects(edges_[i], edges_[j])) return false;
  return true;
}

std::vector<Vertex> PartiteHypergraph::isolated_vertices() const {
  std::vector<Vertex> out;
  for (int p = 0; p < r(); ++p) {
    std::vector<bool> used(part_sizes_[p], false);
    for (const auto& e : edges_) used[e[p]] = true;
    for (int i = 0; i < part_sizes_[p]; ++i)
      if (!used[i]) out.push_back({p, i});
  }
  return out;
}

PartiteHypergraph read_hg(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<int> sizes;
  std::vector<Edge> edges;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    auto fail = [&](const std::string& what) {
      throw ParseError(".hg line " + std::to_string(line_no) + ": " + what);
    };
    if (!have_header) {
      int r = 0;
      if (!(fields >> r) || r < 2) fail("expected `r s_1 .. s_r` with r >= 2");
      sizes.resize(r);
      for (auto& s : sizes)
        if (!(fields >> s) || s < 1) fail("expected " + std::to_string(r) + " positive part sizes");
      have_header = true;
    } else {
      Edge e(sizes.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        int index = 0;
        if (!(fields >> index)) fail("expected " + std::to_string(sizes.size()) + " indices");
        if (index < 1 || index > sizes[i]) fail("index " + std::to_string(index) + " out of range");
        e[i] = index - 1;
      }
      edges.push_back(std::move(e));
    }
    std::string extra;
    if (fields >> extra) fail("trailing token `" + extra + "`");
  }
  if (!have_header) throw ParseError(".hg input has no header line");
  try {
    return PartiteHypergraph(std::move(sizes), std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(".hg: ") + e.what());
  }
}

PartiteHypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_hg(in);
}

PartiteHypergraph parse_hg(const std::string& text) {
  std::istringstream in(text);
  return read_hg(in);
}

void write_hg(std::ostream& out, const PartiteHypergraph& h) {
  out << h.r();
  for (int s : h.part_sizes()) out << ' ' << s;
  out << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i] + 1;
    out << '\n';
  }
}

std::string to_hg_string(const PartiteHypergraph& h) {
  std::ostringstream out;
  write_hg(out, h);
  return out.str();
}

void to_json(nlohmann::json& j, const PartiteHypergraph& h) {
  auto edges = nlohmann::json::array();
  for (const auto& e : h.edges()) {
    auto row = nlohmann::json::array();
    for (int x : e) row.push_back(x + 1);
    edges.push_back(std::move(row));
  }
  j = {{"r", h.r()}, {"part_sizes", h.part_sizes()}, {"edges", std::move(edges)}};
}

void from_json(const nlohmann::json& j, PartiteHypergraph& h) {
  try {
    auto sizes = j.at("part_sizes").get<std::vector<int>>();
    if (j.contains("r") && j.at("r").get<int>() != static_cast<int>(sizes.size()))
      throw ParseError("hypergraph JSON: r does not match part_sizes");
    std::vector<Edge> edges;
    for (const auto& row : j.at("edges")) {
      Edge e = row.get<std::vector<int>>();
      for (auto& x : e) --x;
      edges.push_back(std::move(e));
    }
    h = PartiteHypergraph(std::move(sizes), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("hypergraph JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("hypergraph JSON: ") + e.what());
  }
}

void to_json(nlohmann::json& j, const Vertex& v) { j = {{"part", v.part + 1}, {"index", v.index + 1}}; }

}  // namespace tcover
