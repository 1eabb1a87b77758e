#include "tcover/chain.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "detail/cliques.hpp"
#include "detail/combinations.hpp"
#include "tcover/cover_family.hpp"
#include "tcover/error.hpp"

namespace tcover {

void to_json(nlohmann::json& j, const CoverageChain& chain) {
  auto levels = nlohmann::json::array();
  for (const auto& h : chain.levels) levels.push_back(h);
  j = {{"k", chain.k}, {"m", chain.m()}, {"levels", std::move(levels)}};
}

std::string ChainCheck::message() const {
  if (ok) return "ok";
  std::string out = property;
  if (level >= 0) out += " at level " + std::to_string(level);
  if (!witness.empty()) {
    out += ":";
    for (const auto& e : witness) out += " " + to_string(e);
  }
  return out;
}

namespace {

ChainCheck failure(const char* property, int level, std::vector<Edge> witness) {
  return {false, property, level, std::move(witness)};
}

/// Calls f(tuple) for every set of min(k-1, |E(H_0)|) distinct edges of H_0.
template <class F>
void for_each_base_tuple(const CoverageChain& chain, F&& f) {
  const auto& h0 = chain.levels.front();
  const int m = h0.edge_count();
  if (m == 0) return;
  std::vector<Edge> tuple;
  detail::for_each_combination(m, std::min(chain.k - 1, m), [&](std::span<const int> ids) {
    tuple.clear();
    for (int id : ids) tuple.push_back(h0.edge(id));
    return f(tuple);
  });
}

bool covered_by(const PartiteHypergraph& level, std::span<const Edge> tuple) {
  return std::any_of(level.edges().begin(), level.edges().end(),
                     [&](const Edge& f) { return covers_all(f, tuple); });
}

ChainCheck check_shape(const CoverageChain& chain) {
  if (chain.k < 1) throw InvalidArgument("chain arity must be at least 1");
  if (chain.levels.size() < 2) return failure("shape", -1, {});
  for (const auto& h : chain.levels)
    if (h.part_sizes() != chain.levels.front().part_sizes()) return failure("shape", -1, {});
  return {};
}

ChainCheck check_nesting(const CoverageChain& chain) {
  for (int i = 1; i <= chain.m(); ++i)
    for (const auto& e : chain.levels[i].edges())
      if (!chain.levels[i - 1].has_edge(e)) return failure("nesting", i, {e});
  return {};
}

ChainCheck check_p3(const CoverageChain& chain) {
  const auto& top = chain.levels.back();
  for (int a = 0; a < top.edge_count(); ++a)
    for (int b = a + 1; b < top.edge_count(); ++b)
      if (!intersects(top.edge(a), top.edge(b))) return failure("P3", chain.m(), {top.edge(a), top.edge(b)});
  return {};
}

ChainCheck check_p1(const CoverageChain& chain) {
  ChainCheck result;
  for_each_base_tuple(chain, [&](const std::vector<Edge>& tuple) {
    if (covered_by(chain.levels.back(), tuple)) return true;
    result = failure("P1", chain.m(), tuple);
    return false;
  });
  return result;
}

ChainCheck check_p2(const CoverageChain& chain) {
  ChainCheck result;
  for (int i = 0; i < chain.m() && result.ok; ++i) {
    for_each_base_tuple(chain, [&](const std::vector<Edge>& tuple) {
      std::vector<Edge> extended = tuple;
      extended.emplace_back();
      for (const auto& e : chain.levels[i].edges()) {
        extended.back() = e;
        if (!covered_by(chain.levels[i + 1], extended)) {
          result = failure("P2", i, extended);
          return false;
        }
      }
      return true;
    });
  }
  return result;
}

}  // namespace

ChainCheck check_chain(const CoverageChain& chain) {
  for (auto check : {check_shape, check_nesting, check_p3, check_p1, check_p2}) {
    auto result = check(chain);
    if (!result.ok) return result;
  }
  return {};
}

PropertyBreakdown check_chain_properties(const CoverageChain& chain) {
  PropertyBreakdown out;
  if (!check_shape(chain).ok) throw InvalidArgument("chain needs at least two levels over common parts");
  out.nested = check_nesting(chain).ok;
  out.p1 = check_p1(chain);
  out.p2 = check_p2(chain);
  out.p3 = check_p3(chain);
  return out;
}

namespace {

using detail::Bits;

class ChainSearch {
 public:
  ChainSearch(const PartiteHypergraph& h0, int k, const ChainSearchOptions& options)
      : h0_(h0), k_(k), options_(options), m_(h0.edge_count()) {
    meet_.assign(m_, Bits(m_));
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b)
        if (intersects(h0.edge(a), h0.edge(b))) meet_[a].set(b);
    detail::for_each_combination(m_, std::min(k - 1, m_), [&](std::span<const int> ids) {
      Bits t(m_);
      for (int id : ids) t.set(id);
      tuples_.push_back(std::move(t));
      return true;
    });
    good_.assign(tuples_.size(), Bits(m_));
    for (std::size_t t = 0; t < tuples_.size(); ++t)
      for (int f = 0; f < m_; ++f)
        if (tuples_[t].is_subset_of(meet_[f])) good_[t].set(f);
  }

  std::optional<CoverageChain> run() {
    const int max_m = options_.max_m < 0 ? std::max(1, m_) : options_.max_m;
    if (max_m < 1) return std::nullopt;
    std::vector<Bits> adj(meet_);
    for (int a = 0; a < m_; ++a) adj[a].reset(a);

    std::optional<std::vector<Bits>> best;
    detail::MaximalCliques search(
        adj, options_.max_nodes, [&](const Bits& reachable) { return satisfies_p1(reachable); },
        [&](const Bits& clique) {
          if (!satisfies_p1(clique)) return true;
          auto ladder = grow(clique, max_m);
          if (ladder && (!best || ladder->size() < best->size())) best = std::move(ladder);
          return !(best && best->size() == 2);  // m = 1 cannot be beaten
        });
    search.run();
    if (!best) return std::nullopt;

    CoverageChain chain{k_, {}};
    for (auto it = best->rbegin(); it != best->rend(); ++it) chain.levels.push_back(subgraph(*it));
    return chain;
  }

 private:
  bool satisfies_p1(const Bits& s) const {
    return std::all_of(good_.begin(), good_.end(), [&](const Bits& g) { return g.intersects(s); });
  }

  // A(S): edges e such that every tuple T has f in S meeting T and e.
  Bits advance(const Bits& s) const {
    Bits out(m_);
    out.set();
    for (const auto& g : good_) {
      Bits reach(m_);
      const Bits usable = g & s;
      for (auto f = usable.find_first(); f != Bits::npos; f = usable.find_next(f)) reach |= meet_[f];
      out &= reach;
    }
    return out;
  }

  // Levels S = A^0(S), A^1(S), ... up to E, padded to at least two; nullopt when E
  // is not reached within max_m steps.
  std::optional<std::vector<Bits>> grow(const Bits& s, int max_m) const {
    std::vector<Bits> levels{s};
    while (!levels.back().all()) {
      if (static_cast<int>(levels.size()) > max_m) return std::nullopt;
      Bits next = advance(levels.back());
      if (next == levels.back()) return std::nullopt;
      levels.push_back(std::move(next));
    }
    if (levels.size() == 1) levels.push_back(levels.back());
    return levels;
  }

  PartiteHypergraph subgraph(const Bits& s) const {
    std::vector<int> ids;
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i)) ids.push_back(static_cast<int>(i));
    return h0_.subgraph(ids);
  }

  const PartiteHypergraph& h0_;
  int k_;
  ChainSearchOptions options_;
  int m_;
  std::vector<Bits> meet_;
  std::vector<Bits> tuples_;
  std::vector<Bits> good_;  // per tuple: edges meeting all of it
};

}  // namespace

std::optional<CoverageChain> search_chain(const PartiteHypergraph& h0, int k, const ChainSearchOptions& options) {
  if (k < h0.r()) throw ArityTooSmall("k = " + std::to_string(k) + " is below r = " + std::to_string(h0.r()));
  if (h0.empty()) return CoverageChain{k, {h0, h0}};
  return ChainSearch(h0, k, options).run();
}

CoverageChain build_level_chain(const AuxiliaryMap& am, int k, const std::vector<double>& thresholds) {
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0)) throw InvalidArgument("ladder thresholds must be positive");
    if (i > 0 && !(thresholds[i] > thresholds[i - 1]))
      throw InvalidArgument("ladder thresholds must be strictly increasing");
  }
  if (thresholds.empty()) throw InvalidArgument("ladder needs at least one threshold");
  std::vector<int> multiplicity(am.hypergraph.edge_count(), 0);
  for (int id : am.ed) ++multiplicity[id];
  CoverageChain chain{k, {am.hypergraph}};
  for (double n_i : thresholds) {
    std::vector<int> ids;
    for (int id = 0; id < am.hypergraph.edge_count(); ++id)
      if (multiplicity[id] >= n_i) ids.push_back(id);
    chain.levels.push_back(am.hypergraph.subgraph(ids));
  }
  return chain;
}

std::vector<double> ladder_thresholds(int n, double p) {
  if (n < 2) throw InvalidArgument("ladder needs n >= 2");
  if (!(p > 0 && p <= 1)) throw InvalidArgument("ladder needs 0 < p <= 1");
  const double base = 10.0 * std::log(static_cast<double>(n));
  int m = 1;
  while (std::pow(base, m - 1) < 1.0 / p) ++m;
  std::vector<double> out;
  for (int i = 1; i <= m; ++i) {
    if (i <= m - 2) {
      out.push_back(std::pow(base, i));
    } else if (i == m - 1) {
      out.push_back(1.0 / p);
    } else {
      out.push_back(base / p);
    }
  }
  return out;
}

std::vector<Edge> top_level_matching(const CoverageChain& chain) {
  if (chain.levels.size() < 2 || chain.levels.back().empty())
    throw InvalidArgument("top_level_matching needs a nonempty top level");
  const auto& h0 = chain.levels.front();
  const Edge e = chain.levels.back().edge(0);
  std::vector<Edge> matching{e};
  int level = -1;
  Edge f;
  for (int i = chain.m(); i >= 0 && level < 0; --i)
    for (const auto& g : chain.levels[i].edges())
      if (!intersects(e, g)) {
        level = i;
        f = g;
        break;
      }
  if (level < 0) return matching;
  matching.push_back(f);
  for (const auto& g : h0.edges())
    if (std::none_of(matching.begin(), matching.end(), [&](const Edge& x) { return intersects(x, g); }))
      matching.push_back(g);
  return matching;
}

}  // namespace tcover
