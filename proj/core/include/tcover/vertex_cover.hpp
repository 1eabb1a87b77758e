#pragma once

#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tcover/hypergraph.hpp"

namespace tcover {

enum class Verification { Unverified, Valid, Invalid };

const char* to_string(Verification v);

struct CoverCertificate {
  std::vector<Vertex> vertices;  // sorted by (part, index)
  Verification verified = Verification::Unverified;

  int size() const { return static_cast<int>(vertices.size()); }
};

void to_json(nlohmann::json& j, const CoverCertificate& c);

/// True iff every edge of `h` contains one of `vertices`. Scans the raw edge list;
/// shares nothing with the solver.
bool is_cover(const PartiteHypergraph& h, std::span<const Vertex> vertices);

/// Returns `cert` with `verified` set from is_cover.
CoverCertificate verify(const PartiteHypergraph& h, CoverCertificate cert);

struct TauResult {
  int size = 0;
  CoverCertificate certificate;  // lexicographically least optimal cover, verified
};

/// Exact cover number. Iterative deepening over a budgeted decision procedure that
/// branches on the vertices of one uncovered edge (the one with fewest admissible
/// vertices) and prunes with a greedy packing of pairwise disjoint uncovered edges.
/// The certificate is then fixed slot by slot: the smallest vertex that still admits
/// a completion of the right size, so ties break lexicographically.
TauResult tau(const PartiteHypergraph& h);

/// tau(h).size without building the lexicographically least certificate.
int tau_number(const PartiteHypergraph& h);

/// tau(h) <= t, decided without computing tau.
bool cover_number_at_most(const PartiteHypergraph& h, int t);

/// Ids of a sub-edge-set F with tau(F) = t, obtained by visiting edges in id order
/// and deleting each one whose removal keeps the cover number at least t. No edge of
/// the result can be deleted, so F is tau-critical and |F| <= C(r+t-1, r).
/// Throws TargetUnreachable when tau(h) < t.
std::vector<int> critical_edge_ids(const PartiteHypergraph& h, int t);

PartiteHypergraph critical_subgraph(const PartiteHypergraph& h, int t);

}  // namespace tcover
