#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tcover/auxiliary.hpp"
#include "tcover/hypergraph.hpp"

namespace tcover {

/// H_0 ⊇ H_1 ⊇ ... ⊇ H_m over common parts, with arity k. (k, m)-coverability asks:
///   P1  any k-1 edges of H_0 are all met by one edge of H_m;
///   P2  for i < m, any k-1 edges of H_0 together with any edge of H_i are all met by
///       one edge of H_{i+1};
///   P3  the edges of H_m pairwise intersect.
/// Tuples are multisets, so it is enough to quantify over sets of min(k-1, |E(H_0)|)
/// distinct edges of H_0.
struct CoverageChain {
  int k = 1;
  std::vector<PartiteHypergraph> levels;  // levels[0] = H_0, levels.back() = H_m

  int m() const { return static_cast<int>(levels.size()) - 1; }
};

void to_json(nlohmann::json& j, const CoverageChain& chain);

struct ChainCheck {
  bool ok = true;
  std::string property;      // "shape", "nesting", "P1", "P2" or "P3" when !ok
  int level = -1;            // offending level, when meaningful
  std::vector<Edge> witness;  // uncovered tuple, disjoint pair, or stray edge

  std::string message() const;
};

/// Exhaustive check in the order nesting, P3, P1, P2.
ChainCheck check_chain(const CoverageChain& chain);

/// P1, P2, P3 evaluated separately (nesting assumed); used by the ladder audit.
struct PropertyBreakdown {
  bool nested = true;
  ChainCheck p1;
  ChainCheck p2;
  ChainCheck p3;

  bool all() const { return nested && p1.ok && p2.ok && p3.ok; }
};

PropertyBreakdown check_chain_properties(const CoverageChain& chain);

struct ChainSearchOptions {
  /// Longest chain considered; negative means |E(h0)|, which always suffices.
  int max_m = -1;
  std::uint64_t max_nodes = 50'000'000;
};

/// Finds a chain with the least m, or proves there is none.
///
/// For S ⊆ E let A(S) be the edges e such that every (k-1)-tuple T of E has a member
/// of S meeting all of T and e. P2 says H_i ⊆ A(H_{i+1}); A is monotone, and a
/// pairwise intersecting S satisfying P1 has S ⊆ A(S). So a chain exists iff some
/// pairwise intersecting S satisfying P1 has A^j(S) = E for some j, and then
/// H_{m-j} = A^j(S) is a chain with m = max(1, least such j). Enlarging S to a maximal
/// clique of the intersection graph keeps P1 and P3 and only grows A^j(S), so maximal
/// cliques suffice. The sets A^j(S) strictly grow until they stop, so j <= |E|, and
/// repeated levels of any chain can be dropped: m <= |E| loses nothing.
/// Throws ArityTooSmall when k < r and BudgetExceeded past the node budget.
std::optional<CoverageChain> search_chain(const PartiteHypergraph& h0, int k,
                                          const ChainSearchOptions& options = {});

/// Chain of a coloured graph's auxiliary hypergraph by preimage multiplicity:
/// H_0 = am.hypergraph and H_i = edges e with |ed^{-1}(e)| >= thresholds[i-1].
/// Throws InvalidArgument unless thresholds are positive and strictly increasing.
CoverageChain build_level_chain(const AuxiliaryMap& am, int k, const std::vector<double>& thresholds);

/// n_1..n_m for a graph with n vertices and edge probability p: with m the least
/// integer >= 1 such that (10 ln n)^(m-1) >= 1/p, n_i = (10 ln n)^i for i <= m-2,
/// n_{m-1} = 1/p and n_m = 10 ln n / p.
std::vector<double> ladder_thresholds(int n, double p);

/// For a chain accepted with k = r: a maximal matching of H_0 that contains the first
/// edge e of H_m and has at most r edges. If e meets every edge it is {e}; otherwise
/// take the largest l with an edge f of H_l disjoint from e and extend {e, f} greedily.
std::vector<Edge> top_level_matching(const CoverageChain& chain);

}  // namespace tcover
