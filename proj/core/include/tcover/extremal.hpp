#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tcover/hypergraph.hpp"

namespace tcover {

enum class Quantity {
  IntersectingCovers,  // hi_r(k): max tau with intersecting k-covers
  Coverable,           // Hi_r(k): max tau over (k, m)-coverable hypergraphs, any m
  CoverThreshold,      // kc_r(t): least k such that intersecting k-covers force tau <= t
};

/// "hi", "Hi", "kc".
const char* to_string(Quantity q);
Quantity parse_quantity(const std::string& name);

struct ExtremalCaps {
  int max_part = 3;
  int max_edges = 10;
  /// Also check hand-made instances that may fall outside the caps (for r = 3 the
  /// four disjoint edges and their augmentation by the four cover edges).
  bool include_fixtures = true;
  /// Check every enumerated instance, not only those that would raise the bound.
  bool audit_all = false;
  /// kc only: largest k tried.
  int max_k = -1;
  std::uint64_t max_nodes = 50'000'000;
};

void to_json(nlohmann::json& j, const ExtremalCaps& caps);

struct ExtremalCertificate {
  int tau = 0;
  PartiteHypergraph hypergraph;
  nlohmann::json witness;  // the cover family or chain
  std::string source;      // "enumeration" or a fixture name
};

void to_json(nlohmann::json& j, const ExtremalCertificate& c);

struct ExtremalReport {
  Quantity quantity = Quantity::IntersectingCovers;
  int r = 0;
  int parameter = 0;  // k for hi and Hi, t for kc
  ExtremalCaps caps;

  /// hi, Hi: the largest tau found with a certificate, a lower bound on the quantity
  /// and its exact value within the caps when `exhaustive`.
  /// kc: every k below `lower_bound` has a certificate with tau > t.
  int lower_bound = 0;
  /// Proven upper bound independent of the caps, if one is known.
  std::optional<int> upper_bound;
  /// kc: the first k with no certificate inside the caps.
  std::optional<int> value_within_caps;
  bool exhaustive = false;
  bool exact() const { return upper_bound && *upper_bound == lower_bound; }

  std::uint64_t instances = 0;  // enumerated classes seen
  std::uint64_t checked = 0;    // instances handed to a checker
  std::uint64_t accepted = 0;   // checked instances having the property
  std::uint64_t tau_filtered = 0;  // instances with tau above the refutation threshold
  std::vector<ExtremalCertificate> certificates;
  std::string note;
};

void to_json(nlohmann::json& j, const ExtremalReport& report);

/// Bounded search over isomorph-free r-partite hypergraphs within the caps (parts
/// and edges), plus fixtures. Lower bounds carry certificates; the report never
/// claims exactness beyond the caps unless a proven upper bound meets the lower one.
/// Every accepted instance is checked against tau <= r(2r-1) (hi) and, for Hi with
/// k = r, tau <= r^2; a violation throws CounterexampleFound.
/// Throws BudgetExceeded when a single check overruns max_nodes.
ExtremalReport compute_extremal(Quantity quantity, int r, int parameter, const ExtremalCaps& caps = {});

/// Enumerates 3-partite hypergraphs within the caps and requires search_chain(h, 4)
/// to find nothing whenever tau(h) >= 4. Fixtures with tau = 4 are checked as well.
/// Throws CounterexampleFound with the offending hypergraph otherwise.
ExtremalReport refute_4m_coverable(const ExtremalCaps& caps);

}  // namespace tcover
