#include "tcover/components.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include "tcover/error.hpp"

namespace tcover {

ComponentMap components(const ColouredGraph& g) {
  const int n = g.n();
  std::vector<ColourPartition> parts;
  parts.reserve(g.r());
  for (int c = 1; c <= g.r(); ++c) {
    boost::disjoint_sets_with_storage<> sets(n);
    for (const auto& e : g.edges())
      if (e.colour == c) sets.union_set(e.u, e.v);

    ColourPartition part;
    part.component_of.assign(n, -1);
    std::vector<int> id_of_root(n, -1);
    for (int v = 0; v < n; ++v) {
      const auto root = static_cast<int>(sets.find_set(v));
      if (id_of_root[root] < 0) {
        id_of_root[root] = part.size();
        part.members.emplace_back();
      }
      part.component_of[v] = id_of_root[root];
      part.members[id_of_root[root]].push_back(v);
    }
    parts.push_back(std::move(part));
  }
  return ComponentMap(std::move(parts));
}

bool covers_all_vertices(const ComponentMap& comps, int n, std::span<const ComponentRef> family) {
  std::vector<char> seen(n, 0);
  for (const auto& ref : family) {
    if (ref.colour < 1 || ref.colour > comps.r()) return false;
    const auto& part = comps.colour(ref.colour);
    if (ref.id < 0 || ref.id >= part.size()) return false;
    for (int v : part.members[ref.id]) seen[v] = 1;
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

}  // namespace tcover
