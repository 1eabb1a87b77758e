#include "tcover/cover_family.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "detail/cliques.hpp"
#include "detail/combinations.hpp"
#include "tcover/error.hpp"

namespace tcover {

const char* to_string(CoverMode mode) { return mode == CoverMode::Strict ? "strict" : "augmented"; }

void to_json(nlohmann::json& j, const CoverFamily& cf) {
  auto family = nlohmann::json::array();
  for (const auto& e : cf.family) {
    auto row = nlohmann::json::array();
    for (int x : e) row.push_back(x + 1);
    family.push_back(std::move(row));
  }
  j = {{"host", cf.host}, {"k", cf.k}, {"mode", to_string(cf.mode)}, {"family", std::move(family)}};
}

int tuple_size(int k, int edge_count) { return std::min(k, edge_count); }

bool covers_all(const Edge& f, std::span<const Edge> tuple) {
  return std::all_of(tuple.begin(), tuple.end(), [&](const Edge& e) { return intersects(f, e); });
}

const Edge* phi(const CoverFamily& cf, std::span<const Edge> tuple) {
  for (const auto& f : cf.family)
    if (covers_all(f, tuple)) return &f;
  return nullptr;
}

std::string FamilyCheck::message() const {
  if (ok) return "ok";
  std::string out = failure + ":";
  for (const auto& e : witness) out += " " + to_string(e);
  return out;
}

FamilyCheck check_cover_family(const CoverFamily& cf) {
  if (cf.k < 1) throw InvalidArgument("k must be at least 1");
  FamilyCheck check;
  auto fail = [&](const char* what, std::vector<Edge> witness) {
    check.ok = false;
    check.failure = what;
    check.witness = std::move(witness);
    return check;
  };
  const auto& host = cf.host;
  for (const auto& f : cf.family) {
    if (static_cast<int>(f.size()) != host.r()) return fail("member-not-transversal", {f});
    for (int p = 0; p < host.r(); ++p)
      if (f[p] < 0 || f[p] >= host.part_size(p)) return fail("member-not-transversal", {f});
    if (cf.mode == CoverMode::Strict && !host.has_edge(f)) return fail("member-not-in-host", {f});
  }
  for (std::size_t i = 0; i < cf.family.size(); ++i)
    for (std::size_t j = i + 1; j < cf.family.size(); ++j)
      if (!intersects(cf.family[i], cf.family[j])) return fail("not-intersecting", {cf.family[i], cf.family[j]});

  const int m = host.edge_count();
  if (m == 0) return check;
  std::vector<Edge> tuple;
  detail::for_each_combination(m, tuple_size(cf.k, m), [&](std::span<const int> ids) {
    tuple.clear();
    for (int id : ids) tuple.push_back(host.edge(id));
    if (phi(cf, tuple) != nullptr) return true;
    fail("uncovered-tuple", tuple);
    return false;
  });
  return check;
}

std::vector<Edge> all_transversals(const std::vector<int>& part_sizes) {
  std::vector<Edge> out;
  Edge e(part_sizes.size(), 0);
  while (true) {
    out.push_back(e);
    int p = static_cast<int>(e.size()) - 1;
    while (p >= 0 && ++e[p] == part_sizes[p]) e[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

std::optional<CoverFamily> search_cover_family(const PartiteHypergraph& host, int k, CoverMode mode,
                                               const FamilySearchOptions& options) {
  if (k < host.r()) throw ArityTooSmall("k = " + std::to_string(k) + " is below r = " + std::to_string(host.r()));
  const int m = host.edge_count();
  if (m == 0) return CoverFamily{host, k, {}, mode};

  std::vector<Edge> pool;
  if (mode == CoverMode::Strict) {
    pool = host.edges();
  } else {
    std::uint64_t count = 1;
    for (int s : host.part_sizes()) {
      count *= static_cast<std::uint64_t>(s);
      if (count > options.max_transversals)
        throw BudgetExceeded("augmented cover search: too many transversals");
    }
    pool = all_transversals(host.part_sizes());
  }

  // Tuples of min(k, m) distinct edges, and which pool members cover which tuple.
  std::vector<std::vector<int>> tuples;
  detail::for_each_combination(m, tuple_size(k, m), [&](std::span<const int> ids) {
    tuples.emplace_back(ids.begin(), ids.end());
    return true;
  });
  const auto t = tuples.size();
  std::vector<Edge> candidates;
  std::vector<detail::Bits> covers;
  for (const auto& f : pool) {
    detail::Bits mask(t);
    for (std::size_t i = 0; i < t; ++i) {
      bool all = true;
      for (int id : tuples[i]) all = all && intersects(f, host.edge(id));
      if (all) mask.set(i);
    }
    // Members covering nothing can be dropped from any valid family.
    if (mask.any()) {
      candidates.push_back(f);
      covers.push_back(std::move(mask));
    }
  }
  const auto c = candidates.size();
  if (c == 0) return std::nullopt;
  std::vector<detail::Bits> adj(c, detail::Bits(c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (i != j && intersects(candidates[i], candidates[j])) adj[i].set(j);

  auto coverage = [&](const detail::Bits& members) {
    detail::Bits covered(t);
    for (auto i = members.find_first(); i != detail::Bits::npos; i = members.find_next(i)) covered |= covers[i];
    return covered;
  };
  std::optional<detail::Bits> found;
  detail::MaximalCliques search(
      adj, options.max_nodes, [&](const detail::Bits& reachable) { return coverage(reachable).all(); },
      [&](const detail::Bits& clique) {
        if (!coverage(clique).all()) return true;
        found = clique;
        return false;
      });
  search.run();
  if (!found) return std::nullopt;

  // Thin to a minimal covering subfamily, dropping members in order.
  detail::Bits kept = *found;
  for (auto i = found->find_first(); i != detail::Bits::npos; i = found->find_next(i)) {
    kept.reset(i);
    if (!coverage(kept).all()) kept.set(i);
  }
  CoverFamily cf{host, k, {}, mode};
  for (auto i = kept.find_first(); i != detail::Bits::npos; i = kept.find_next(i)) cf.family.push_back(candidates[i]);
  std::sort(cf.family.begin(), cf.family.end());
  return cf;
}

}  // namespace tcover
