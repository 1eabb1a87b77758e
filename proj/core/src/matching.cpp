#include "tcover/matching.hpp"

#include <algorithm>
#include <map>

#include "tcover/error.hpp"
#include "tcover/vertex_cover.hpp"

namespace tcover {

namespace {

class Kuhn {
 public:
  Kuhn(int left, int right, std::span<const std::pair<int, int>> edges)
      : adj_(left), match_left_(left, -1), match_right_(right, -1) {
    for (auto [u, v] : edges) {
      if (u < 0 || u >= left || v < 0 || v >= right) throw InvalidArgument("bipartite edge out of range");
      adj_[u].push_back(v);
    }
    for (auto& row : adj_) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    for (int u = 0; u < left; ++u) {
      seen_.assign(right, false);
      augment(u);
    }
  }

  const std::vector<int>& match_left() const { return match_left_; }
  const std::vector<int>& match_right() const { return match_right_; }
  const std::vector<std::vector<int>>& adj() const { return adj_; }

 private:
  bool augment(int u) {
    for (int v : adj_[u]) {
      if (seen_[v]) continue;
      seen_[v] = true;
      if (match_right_[v] < 0 || augment(match_right_[v])) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<bool> seen_;
};

class PackingSearch {
 public:
  explicit PackingSearch(const PartiteHypergraph& h) : h_(h) {}

  std::vector<int> solve() {
    std::vector<int> candidates(h_.edge_count());
    for (int i = 0; i < h_.edge_count(); ++i) candidates[i] = i;
    branch(candidates);
    return best_;
  }

 private:
  // Upper bound: per part, distinct vertices used by candidates; a packing uses
  // each vertex at most once.
  std::size_t bound(const std::vector<int>& candidates) const {
    std::size_t best = candidates.size();
    for (int p = 0; p < h_.r(); ++p) {
      std::vector<bool> used(h_.part_size(p), false);
      std::size_t distinct = 0;
      for (int e : candidates)
        if (!used[h_.edge(e)[p]]) {
          used[h_.edge(e)[p]] = true;
          ++distinct;
        }
      best = std::min(best, distinct);
    }
    return best;
  }

  void branch(const std::vector<int>& candidates) {
    if (current_.size() > best_.size()) best_ = current_;
    if (candidates.empty() || current_.size() + bound(candidates) <= best_.size()) return;
    const int e = candidates.front();
    std::vector<int> rest;
    for (std::size_t i = 1; i < candidates.size(); ++i)
      if (!intersects(h_.edge(e), h_.edge(candidates[i]))) rest.push_back(candidates[i]);
    current_.push_back(e);
    branch(rest);
    current_.pop_back();
    branch(std::vector<int>(candidates.begin() + 1, candidates.end()));
  }

  const PartiteHypergraph& h_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

std::vector<std::pair<int, int>> bipartite_matching(int left, int right,
                                                    std::span<const std::pair<int, int>> edges) {
  Kuhn kuhn(left, right, edges);
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < left; ++u)
    if (kuhn.match_left()[u] >= 0) out.emplace_back(u, kuhn.match_left()[u]);
  return out;
}

std::pair<std::vector<int>, std::vector<int>> bipartite_vertex_cover(
    int left, int right, std::span<const std::pair<int, int>> edges) {
  Kuhn kuhn(left, right, edges);
  // Alternating reachability from unmatched left vertices: cover is
  // (left not reached) + (right reached).
  std::vector<bool> left_seen(left, false), right_seen(right, false);
  std::vector<int> stack;
  for (int u = 0; u < left; ++u)
    if (kuhn.match_left()[u] < 0) {
      left_seen[u] = true;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : kuhn.adj()[u]) {
      if (right_seen[v]) continue;
      right_seen[v] = true;
      const int w = kuhn.match_right()[v];
      if (w >= 0 && !left_seen[w]) {
        left_seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> cover;
  for (int u = 0; u < left; ++u)
    if (!left_seen[u]) cover.first.push_back(u);
  for (int v = 0; v < right; ++v)
    if (right_seen[v]) cover.second.push_back(v);
  return cover;
}

std::vector<int> max_matching_ids(const PartiteHypergraph& h) {
  if (h.r() == 2) {
    std::map<std::pair<int, int>, int> id_of;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < h.edge_count(); ++i) {
      pairs.emplace_back(h.edge(i)[0], h.edge(i)[1]);
      id_of.emplace(pairs.back(), i);
    }
    std::vector<int> ids;
    for (const auto& pair : bipartite_matching(h.part_size(0), h.part_size(1), pairs))
      ids.push_back(id_of.at(pair));
    std::sort(ids.begin(), ids.end());
    return ids;
  }
  return PackingSearch(h).solve();
}

std::vector<Edge> max_matching(const PartiteHypergraph& h) {
  std::vector<Edge> out;
  for (int id : max_matching_ids(h)) out.push_back(h.edge(id));
  return out;
}

std::vector<Edge> skew_matching(const PartiteHypergraph& h, std::span<const Vertex> t_set,
                                int a_part) {
  if (h.r() != 3) throw InfeasibleArity("skew matching needs a 3-partite hypergraph");
  if (a_part < 0 || a_part >= 3) throw InvalidArgument("part index out of range");
  const int need = tau_number(h) - static_cast<int>(t_set.size());
  if (need < 0) throw InvalidArgument("t_set is larger than the cover number");

  const int p = a_part == 0 ? 1 : 0;
  const int q = a_part == 2 ? 1 : 2;
  std::map<std::pair<int, int>, int> preimage;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    bool avoids = true;
    for (const auto& v : t_set) avoids = avoids && !contains(e, v);
    if (!avoids) continue;
    const std::pair<int, int> pq{e[p], e[q]};
    if (preimage.emplace(pq, i).second) pairs.push_back(pq);
  }
  const auto matched = bipartite_matching(h.part_size(p), h.part_size(q), pairs);
  if (static_cast<int>(matched.size()) < need) throw InternalError("skew matching: projection too small");
  std::vector<Edge> out;
  for (int i = 0; i < need; ++i) out.push_back(h.edge(preimage.at(matched[i])));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tcover
