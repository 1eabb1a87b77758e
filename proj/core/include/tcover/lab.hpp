#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tcover/coloured_graph.hpp"
#include "tcover/cover_family.hpp"
#include "tcover/hypergraph.hpp"

namespace tcover {

enum class ExperimentKind { AdversarialSweep, PropertyAudit, OracleCorpus };

const char* to_string(ExperimentKind kind);

/// p = coefficient * (ln n / n)^(1/root), clamped to [0, 1]. With `controls` the
/// sweep also runs p = 0 and p = 1.
struct PRule {
  int root = 4;
  std::vector<double> coefficients{1.0};
  bool controls = true;
  /// Explicit probabilities, used instead of the formula when non-empty.
  std::vector<double> values;
};

double p_from_rule(int n, int root, double coefficient);

/// Cover-family gadget for the adversarial construction. Paths are .hg files; the
/// name "ems" selects the built-in four disjoint edges with their four cover edges.
struct Gadget {
  std::string name = "ems";
  std::string hypergraph_path;
  std::string family_path;
  int k = 3;
  CoverMode mode = CoverMode::Augmented;
};

CoverFamily load_gadget(const Gadget& gadget);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::AdversarialSweep;
  std::vector<int> n;
  PRule p_rule;
  int trials = 1;
  std::uint64_t seed = 0;
  Gadget gadget;
  std::string output;
  int threads = 1;
  std::uint64_t node_budget = 20'000;
  bool timing = false;

  // oracle-corpus
  int count = 200;
  int max_n = 8;
  std::vector<int> r_values{2, 3};

  // property-audit
  int r = 3;
  int k = 3;
  std::string colouring = "random";  // or "dominant"
  bool audit_properties = false;
  double c = 6.0;  // constant of the neighbourhood properties
};

/// Missing fields take the defaults above. Throws ParseError on unknown kinds or
/// ill-typed fields.
ExperimentSpec parse_spec(const nlohmann::json& j);
ExperimentSpec read_spec_file(const std::string& path);
nlohmann::json spec_to_json(const ExperimentSpec& spec);

/// FNV-1a 64 of the canonical JSON of the spec, without fields that cannot change
/// results (threads, output).
std::uint64_t spec_hash(const ExperimentSpec& spec);
std::string hex64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view bytes);

/// RFC 4180: quote fields containing a comma, quote or line break; double quotes.
std::string csv_field(std::string_view field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// Shortest round-trip formatting of a double, "NA" for NaN.
std::string format_double(double x);

struct SweepRow {
  int n = 0;
  std::string coefficient;  // "control" for p = 0 and p = 1
  double p = 0;
  std::uint64_t seed = 0;
  int trial = 0;
  bool found = false;
  std::optional<int> bound;
  std::string status;  // found | not-found | budget-exhausted | precondition:<which> | error:<what>
  double wall_time = -1;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// Fraction of successful trials per (n, p), in row order.
  std::vector<std::pair<std::pair<int, double>, double>> success_rates() const;
};

/// Per (n, p, trial): sample G(n, p) with seed derive_seed(derive_seed(seed, n), trial)
/// (the same for every p, so samples are nested in p), look for an independent set
/// of |E(target)| vertices no k + 1 of which share a neighbour, and on success build
/// the assignment, colour G and record tau(H_0) as the achieved bound. Per-trial
/// errors end up in the status column.
SweepResult run_adversarial_sweep(const ExperimentSpec& spec);
void write_sweep_csv(std::ostream& out, const ExperimentSpec& spec, const SweepResult& result);

/// Random coloured graphs checked against every statement relating G and H(G, W, c),
/// plus the adversarial construction with small gadgets where it applies.
nlohmann::json run_oracle_corpus(const ExperimentSpec& spec);

/// One oracle instance, exposed for tests.
struct OracleInstance {
  int index = 0;
  std::uint64_t seed = 0;
  ColouredGraph graph;
  std::vector<int> w;  // random subset for the collapse check
  int s = 0;           // witness target
};

OracleInstance oracle_instance(const ExperimentSpec& spec, int index);

/// Multiplicity-ladder chains on sampled graphs, with P1-P3 reported individually.
nlohmann::json run_level_ladder_audit(const ExperimentSpec& spec);

/// Output header lines ("# key=value") shared by every output.
std::vector<std::pair<std::string, std::string>> provenance(const ExperimentSpec& spec);

}  // namespace tcover
