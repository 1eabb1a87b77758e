#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tcover/hypergraph.hpp"

namespace tcover {

/// All transversals of r parts of size max_part, numbered by lexicographic rank.
/// An edge set is a 64-bit mask over these numbers, so max_part^r <= 64.
class EdgeSpace {
 public:
  EdgeSpace(int r, int max_part);

  int r() const { return r_; }
  int max_part() const { return max_part_; }
  int size() const { return size_; }

  Edge edge(int index) const;
  int index(const Edge& e) const;

  PartiteHypergraph to_hypergraph(std::uint64_t mask) const;
  std::uint64_t to_mask(const PartiteHypergraph& h) const;

 private:
  int r_;
  int max_part_;
  int size_;
};

struct EnumerateOptions {
  int r = 3;
  int max_part = 2;
  /// Largest edge count emitted; negative means no cap.
  int max_edges = -1;
  /// Quotient by permutations of the parts as well as of the vertices in each part.
  bool part_permutations = false;
  /// Only pairwise-intersecting edge sets. Hereditary, so it prunes the search.
  bool pairwise_intersecting_only = false;
  /// Partitioned streaming: subtrees rooted at 2-edge nodes are dealt round-robin
  /// to shards; shard 0 also emits the sets with fewer than two edges. The union
  /// over shards is the unsharded output.
  int shard = 0;
  int shard_count = 1;
  /// Largest relabelling group the canonicity test may enumerate.
  std::uint64_t max_group_size = 1'000'000;
};

struct EnumerationStats {
  std::uint64_t emitted = 0;  // passed the predicate and were visited
  std::uint64_t canonical = 0;  // isomorphism classes generated (before the predicate)
};

/// Return false from a visitor to stop the enumeration.
using MaskVisitor = std::function<bool(std::uint64_t mask)>;
using HypergraphPredicate = std::function<bool(const PartiteHypergraph&)>;
using HypergraphVisitor = std::function<bool(const PartiteHypergraph&)>;

/// Orderly generation. Each isomorphism class (relabelling vertices inside parts,
/// optionally also permuting parts) is produced once, as the edge set whose sorted
/// list of edge ranks is lexicographically least in its orbit. The parent of a
/// canonical set is the set minus its largest edge, which is again canonical, so a
/// depth-first search that adds larger edges and keeps canonical children reaches
/// every class exactly once. Every vertex of every part is present, so sets differing
/// only in isolated vertices are the same class.
/// Throws BudgetExceeded when max_part^r > 64 or the group is too large.
EnumerationStats enumerate_masks(const EnumerateOptions& options, const MaskVisitor& visit);

EnumerationStats enumerate(const EnumerateOptions& options, const HypergraphPredicate& predicate,
                           const HypergraphVisitor& visit);

/// Lexicographically least relabelling of a hypergraph of any part sizes: part sizes
/// (permuted too when part_permutations is set) followed by the sorted edge list.
struct CanonicalForm {
  std::vector<int> part_sizes;
  std::vector<Edge> edges;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalOptions {
  bool part_permutations = false;
  /// Delete isolated vertices first ("up to isolated vertices").
  bool ignore_isolated = false;
  std::uint64_t max_group_size = 1'000'000;
};

CanonicalForm canonical_form(const PartiteHypergraph& h, const CanonicalOptions& options = {});
bool isomorphic(const PartiteHypergraph& a, const PartiteHypergraph& b,
                const CanonicalOptions& options = {});

}  // namespace tcover
