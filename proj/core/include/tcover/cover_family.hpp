#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tcover/hypergraph.hpp"

namespace tcover {

/// Strict: every member of the family is an edge of the host. Augmented: members may
/// be any transversal; the host is then meant to be extended by them before use.
enum class CoverMode { Strict, Augmented };

const char* to_string(CoverMode mode);

/// Finite stand-in for a choice function phi on k-tuples of edges: phi(T) is the
/// first member of `family` (in sorted order) meeting every edge of T. If the family
/// pairwise intersects and covers every k-tuple, phi is a valid choice of
/// intersecting k-covers; conversely the image of any valid phi is such a family.
struct CoverFamily {
  PartiteHypergraph host;
  int k = 1;
  std::vector<Edge> family;  // sorted
  CoverMode mode = CoverMode::Strict;
};

void to_json(nlohmann::json& j, const CoverFamily& cf);

/// Tuples of edges are multisets, so covering every k-tuple is the same as covering
/// every set of min(k, |E|) distinct edges; an edgeless host has no tuples.
int tuple_size(int k, int edge_count);

/// Does `f` meet every edge of `tuple`?
bool covers_all(const Edge& f, std::span<const Edge> tuple);

/// phi(T): first family member covering `tuple`, or nullptr.
const Edge* phi(const CoverFamily& cf, std::span<const Edge> tuple);

struct FamilyCheck {
  bool ok = true;
  std::string failure;                       // "member-not-in-host" | "not-intersecting" | "uncovered-tuple"
  std::vector<Edge> witness;                 // offending member(s) or tuple
  std::string message() const;
};

/// Checks the family against the definition. Any k >= 1 is accepted.
FamilyCheck check_cover_family(const CoverFamily& cf);

struct FamilySearchOptions {
  std::uint64_t max_nodes = 50'000'000;
  /// Augmented mode draws members from all transversals; refuse beyond this many.
  std::uint64_t max_transversals = 4096;
};

/// Decides whether a valid family exists. A superset of a valid family is valid as
/// long as it still pairwise intersects, so only maximal cliques of the intersection
/// graph on the candidate members need checking (Bron-Kerbosch with pivoting, pruned
/// when the remaining candidates cannot cover some tuple). The family returned is the
/// first valid clique, thinned to a minimal covering subfamily.
/// Throws ArityTooSmall when k < r and BudgetExceeded past the node budget.
std::optional<CoverFamily> search_cover_family(const PartiteHypergraph& host, int k, CoverMode mode,
                                               const FamilySearchOptions& options = {});

/// All transversals of the host's parts in lexicographic order.
std::vector<Edge> all_transversals(const std::vector<int>& part_sizes);

}  // namespace tcover
