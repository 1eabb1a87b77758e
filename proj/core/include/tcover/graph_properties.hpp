#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tcover/coloured_graph.hpp"

namespace tcover {

// Audits of the random-graph properties that the upper-bound argument relies on.
// Each check quantifies over exponentially many vertex sets: exhaustively when the
// number of candidates is at most `exhaustive_limit`, otherwise over `samples`
// seeded uniform draws. Reports say which mode ran and how many cases were seen.

struct AuditOptions {
  std::uint64_t exhaustive_limit = 10'000'000;
  std::uint64_t samples = 20'000;
  std::uint64_t seed = 0;
  std::size_t max_witnesses = 8;
};

struct PropertyWitness {
  std::vector<int> first;   // A, the tuple, or U
  std::vector<int> second;  // B or the extra tuple (may be empty)
  double observed = 0;
  double required = 0;
};

struct PropertyReport {
  std::string property;
  std::string parameters;
  bool exhaustive = false;
  std::uint64_t cases = 0;
  double candidate_count = 0;  // may exceed 2^64, hence double
  std::uint64_t violation_count = 0;
  std::vector<PropertyWitness> violations;  // first few only

  bool holds() const { return violation_count == 0; }
};

void to_json(nlohmann::json& j, const PropertyReport& report);

/// Threshold helpers; logarithms are natural.
double large_set_threshold(int n, double p);                    // 10 ln n / p
double common_neighbourhood_threshold(int n, double p, double c);  // (c/2) ln n / p
double expansion_factor(int n, double c);                       // c ln n / 6

/// Any two disjoint vertex sets of size at least `min_set_size` are joined by an
/// edge. For each candidate A of size s = ceil(min_set_size) the best B is the
/// complement of the closed neighbourhood of A, so only A is quantified.
PropertyReport check_large_sets_joined(const Graph& g, double min_set_size,
                                       const AuditOptions& options = {});

/// Any `tuple_size` distinct vertices have at least `min_common` common neighbours.
PropertyReport check_common_neighbourhoods(const Graph& g, int tuple_size, double min_common,
                                           const AuditOptions& options = {});

/// For every U with 1 <= |U| <= max_u and `tuple_size` vertices v_i:
/// |N[U] ∩ N[v_1] ∩ ... | >= factor * |U|, with N[.] the closed neighbourhood.
PropertyReport check_neighbourhood_expansion(const Graph& g, int tuple_size, int max_u,
                                             double factor, const AuditOptions& options = {});

}  // namespace tcover
