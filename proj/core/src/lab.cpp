#include "tcover/lab.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "detail/combinations.hpp"
#include "tcover/adversarial.hpp"
#include "tcover/auxiliary.hpp"
#include "tcover/chain.hpp"
#include "tcover/error.hpp"
#include "tcover/fixtures.hpp"
#include "tcover/graph_properties.hpp"
#include "tcover/prng.hpp"
#include "tcover/random_graph.hpp"
#include "tcover/tree_cover.hpp"
#include "tcover/vertex_cover.hpp"

namespace tcover {

using nlohmann::json;

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::AdversarialSweep:
      return "adversarial-sweep";
    case ExperimentKind::PropertyAudit:
      return "property-audit";
    case ExperimentKind::OracleCorpus:
      return "oracle-corpus";
  }
  return "?";
}

double p_from_rule(int n, int root, double coefficient) {
  if (n < 2) throw InvalidArgument("p rule needs n >= 2");
  if (root < 1) throw InvalidArgument("p rule root must be positive");
  const double x = std::log(static_cast<double>(n)) / n;
  return std::clamp(coefficient * std::pow(x, 1.0 / root), 0.0, 1.0);
}

CoverFamily load_gadget(const Gadget& gadget) {
  if (gadget.hypergraph_path.empty()) {
    if (gadget.name != "ems") throw InvalidArgument("unknown built-in gadget '" + gadget.name + "'");
    return {fixtures::ems(), gadget.k, fixtures::ems_covers().edges(), CoverMode::Augmented};
  }
  CoverFamily cf{read_hg_file(gadget.hypergraph_path), gadget.k, {}, gadget.mode};
  if (!gadget.family_path.empty()) {
    const auto family = read_hg_file(gadget.family_path);
    if (family.part_sizes() != cf.host.part_sizes())
      throw InvalidArgument("gadget family and hypergraph have different parts");
    cf.family = family.edges();
  } else {
    auto found = search_cover_family(cf.host, gadget.k, gadget.mode);
    if (!found) throw PreconditionViolated("cover-family", "gadget has no intersecting k-covers");
    cf = std::move(*found);
  }
  return cf;
}

// ---------------------------------------------------------------------------
// Spec

namespace {

template <class T>
T field(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("spec field '") + key + "': " + e.what());
  }
}

ExperimentKind parse_kind(const std::string& s) {
  for (auto kind : {ExperimentKind::AdversarialSweep, ExperimentKind::PropertyAudit, ExperimentKind::OracleCorpus})
    if (s == to_string(kind)) return kind;
  throw ParseError("unknown experiment kind '" + s + "'");
}

}  // namespace

ExperimentSpec parse_spec(const json& j) {
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  ExperimentSpec spec;
  spec.kind = parse_kind(field<std::string>(j, "kind", to_string(spec.kind)));
  spec.n = field(j, "n", spec.n);
  if (j.contains("p_rule")) {
    const auto& pr = j.at("p_rule");
    spec.p_rule.root = field(pr, "root", spec.p_rule.root);
    spec.p_rule.coefficients = field(pr, "coefficients", spec.p_rule.coefficients);
    spec.p_rule.controls = field(pr, "controls", spec.p_rule.controls);
    spec.p_rule.values = field(pr, "values", spec.p_rule.values);
  }
  spec.trials = field(j, "trials", spec.trials);
  spec.seed = field(j, "seed", spec.seed);
  if (j.contains("gadget")) {
    const auto& g = j.at("gadget");
    spec.gadget.name = field(g, "name", spec.gadget.name);
    spec.gadget.hypergraph_path = field(g, "hypergraph", spec.gadget.hypergraph_path);
    spec.gadget.family_path = field(g, "family", spec.gadget.family_path);
    spec.gadget.k = field(g, "k", spec.gadget.k);
    const auto mode = field<std::string>(g, "mode", to_string(spec.gadget.mode));
    if (mode != "strict" && mode != "augmented") throw ParseError("gadget mode must be strict or augmented");
    spec.gadget.mode = mode == "strict" ? CoverMode::Strict : CoverMode::Augmented;
  }
  spec.output = field(j, "output", spec.output);
  spec.threads = field(j, "threads", spec.threads);
  spec.node_budget = field(j, "node_budget", spec.node_budget);
  spec.timing = field(j, "timing", spec.timing);
  spec.count = field(j, "count", spec.count);
  spec.max_n = field(j, "max_n", spec.max_n);
  spec.r_values = field(j, "r_values", spec.r_values);
  spec.r = field(j, "r", spec.r);
  spec.k = field(j, "k", spec.k);
  spec.colouring = field(j, "colouring", spec.colouring);
  spec.audit_properties = field(j, "audit_properties", spec.audit_properties);
  spec.c = field(j, "c", spec.c);
  if (spec.trials < 0 || spec.count < 0) throw ParseError("trials and count must be non-negative");
  if (spec.threads < 1) throw ParseError("threads must be at least 1");
  if (spec.colouring != "random" && spec.colouring != "dominant")
    throw ParseError("colouring must be random or dominant");
  for (int r : spec.r_values)
    if (r < 2 || r > 3) throw ParseError("oracle corpus supports r in {2, 3}");
  return spec;
}

ExperimentSpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec " + path);
  try {
    return parse_spec(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ParseError("spec " + path + ": " + e.what());
  }
}

json spec_to_json(const ExperimentSpec& spec) {
  json j = {{"kind", to_string(spec.kind)},
            {"n", spec.n},
            {"p_rule",
             {{"root", spec.p_rule.root},
              {"coefficients", spec.p_rule.coefficients},
              {"controls", spec.p_rule.controls},
              {"values", spec.p_rule.values}}},
            {"trials", spec.trials},
            {"seed", spec.seed},
            {"gadget",
             {{"name", spec.gadget.name},
              {"hypergraph", spec.gadget.hypergraph_path},
              {"family", spec.gadget.family_path},
              {"k", spec.gadget.k},
              {"mode", to_string(spec.gadget.mode)}}},
            {"output", spec.output},
            {"threads", spec.threads},
            {"node_budget", spec.node_budget},
            {"timing", spec.timing},
            {"count", spec.count},
            {"max_n", spec.max_n},
            {"r_values", spec.r_values},
            {"r", spec.r},
            {"k", spec.k},
            {"colouring", spec.colouring},
            {"audit_properties", spec.audit_properties},
            {"c", spec.c}};
  return j;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

// The spec without the fields that cannot change results.
json result_spec_json(const ExperimentSpec& spec) {
  auto j = spec_to_json(spec);
  j.erase("threads");
  j.erase("output");
  return j;
}

}  // namespace

std::uint64_t spec_hash(const ExperimentSpec& spec) { return fnv1a64(result_spec_json(spec).dump()); }

std::string hex64(std::uint64_t x) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, x >>= 4) out[i] = digits[x & 0xf];
  return out;
}

std::vector<std::pair<std::string, std::string>> provenance(const ExperimentSpec& spec) {
  return {{"kind", to_string(spec.kind)},
          {"spec_hash", "fnv1a64:" + hex64(spec_hash(spec))},
          {"spec", result_spec_json(spec).dump()},
          {"generator", std::string(kGeneratorName)},
          {"version", TCOVER_VERSION},
          {"seed", std::to_string(spec.seed)}};
}

// ---------------------------------------------------------------------------
// CSV

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_field(fields[i]);
  }
  out << "\r\n";
}

std::string format_double(double x) {
  if (std::isnan(x)) return "NA";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw InternalError("double formatting failed");
  return std::string(buf, end);
}

// ---------------------------------------------------------------------------
// Parallel driver: jobs are indexed, results land in their slot, so the output does
// not depend on the number of threads.

namespace {

template <class F>
void parallel_for(int count, int threads, F&& f) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct PPoint {
  std::string coefficient;
  double p;
};

std::vector<PPoint> p_points(const ExperimentSpec& spec, int n) {
  std::vector<PPoint> out;
  if (spec.p_rule.controls) out.push_back({"control", 0.0});
  if (!spec.p_rule.values.empty()) {
    for (double p : spec.p_rule.values) {
      if (!(p >= 0 && p <= 1)) throw InvalidArgument("p values must lie in [0, 1]");
      out.push_back({"NA", p});
    }
  } else {
    for (double c : spec.p_rule.coefficients) out.push_back({format_double(c), p_from_rule(n, spec.p_rule.root, c)});
  }
  if (spec.p_rule.controls) out.push_back({"control", 1.0});
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, int n, int trial) {
  return derive_seed(derive_seed(seed, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(trial));
}

}  // namespace

std::vector<std::pair<std::pair<int, double>, double>> SweepResult::success_rates() const {
  std::vector<std::pair<std::pair<int, double>, double>> out;
  std::vector<int> totals;
  for (const auto& row : rows) {
    if (out.empty() || out.back().first != std::make_pair(row.n, row.p)) {
      out.push_back({{row.n, row.p}, 0.0});
      totals.push_back(0);
    }
    out.back().second += row.found && row.bound ? 1.0 : 0.0;
    ++totals.back();
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].second /= totals[i];
  return out;
}

SweepResult run_adversarial_sweep(const ExperimentSpec& spec) {
  const CoverFamily gadget = load_gadget(spec.gadget);
  const int k = gadget.k;
  const int m = assignment_target(gadget.host, gadget).edge_count();

  struct Job {
    int n;
    PPoint point;
    int trial;
  };
  std::vector<Job> jobs;
  for (int n : spec.n)
    for (const auto& point : p_points(spec, n))
      for (int t = 0; t < spec.trials; ++t) jobs.push_back({n, point, t});

  SweepResult result;
  result.rows.resize(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), spec.threads, [&](int i) {
    const auto& job = jobs[i];
    auto& row = result.rows[i];
    row.n = job.n;
    row.coefficient = job.point.coefficient;
    row.p = job.point.p;
    row.trial = job.trial;
    row.seed = trial_seed(spec.seed, job.n, job.trial);
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto sample = sample_gnp({job.n, job.point.p, row.seed});
      const auto found = find_sparse_independent_set(sample.graph, m, k + 1, {spec.node_budget, false});
      row.found = found.found();
      row.status = to_string(found.status);
      if (row.found) {
        const auto ea = build_ed0_from_independent_set(sample.graph, gadget.host, found.vertices, gadget, k);
        const auto report = verify_lower_bound(sample.graph, ea, 0);
        row.bound = report.bound();
      }
    } catch (const PreconditionViolated& e) {
      row.status = "precondition:" + e.which();
    } catch (const std::exception& e) {
      row.status = std::string("error:") + e.what();
    }
    if (spec.timing)
      row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  return result;
}

void write_sweep_csv(std::ostream& out, const ExperimentSpec& spec, const SweepResult& result) {
  for (const auto& [key, value] : provenance(spec)) out << "# " << key << '=' << value << "\r\n";
  write_csv_row(out, {"n", "coefficient", "p", "seed", "trial", "is_found", "bound_achieved", "status", "wall_time"});
  for (const auto& row : result.rows)
    write_csv_row(out, {std::to_string(row.n), row.coefficient, format_double(row.p), std::to_string(row.seed),
                        std::to_string(row.trial), row.found ? "1" : "0",
                        row.bound ? std::to_string(*row.bound) : "NA", row.status,
                        row.wall_time < 0 ? "NA" : format_double(row.wall_time)});
}

// ---------------------------------------------------------------------------
// Oracle corpus

OracleInstance oracle_instance(const ExperimentSpec& spec, int index) {
  if (spec.max_n < 1) throw InvalidArgument("max_n must be positive");
  if (spec.r_values.empty()) throw InvalidArgument("r_values is empty");
  OracleInstance inst;
  inst.index = index;
  inst.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(index));
  RngStream rng(inst.seed);
  const int r = spec.r_values[rng.below(spec.r_values.size())];
  const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.max_n)));
  const double p = rng.uniform();
  const auto sample = sample_gnp({n, p, derive_seed(inst.seed, 1)});
  inst.graph = random_colouring(sample.graph, r, derive_seed(inst.seed, 2));
  for (int v = 0; v < n; ++v)
    if (rng.bernoulli(0.5)) inst.w.push_back(v);
  const int t = tau_number(build_auxiliary(inst.graph).hypergraph);
  inst.s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(t, 1))));
  return inst;
}

namespace {

struct SmallGadget {
  CoverFamily family;
  int m;
};

SmallGadget small_gadget(int r) {
  CoverFamily cf;
  if (r == 2) {
    cf = *search_cover_family(fixtures::disjoint_edges(2, 2), 2, CoverMode::Augmented);
  } else {
    const auto h = fixtures::h_star();
    cf = {h, 3, h.edges(), CoverMode::Strict};
  }
  return {cf, assignment_target(cf.host, cf).edge_count()};
}

using Check = std::function<std::string(const ColouredGraph&, std::span<const int> w, int s)>;

// Every check returns "" on success or a description of the failure.
struct NamedCheck {
  const char* name;
  Check run;
};

std::vector<NamedCheck> oracle_checks(const std::vector<SmallGadget>& gadgets, int* applicable) {
  std::vector<NamedCheck> checks;
  checks.push_back({"cover-equality", [](const ColouredGraph& g, std::span<const int>, int) -> std::string {
                      const auto tc = tree_cover_number(g);
                      const auto t = tau(build_auxiliary(g).hypergraph);
                      if (tc.size != t.size)
                        return "tree cover " + std::to_string(tc.size) + " vs tau " + std::to_string(t.size);
                      return "";
                    }});
  checks.push_back({"cover-roundtrip", [](const ColouredGraph& g, std::span<const int>, int) -> std::string {
                      const auto am = build_auxiliary(g);
                      const auto tc = tree_cover_number(g);
                      const auto t = tau(am.hypergraph);
                      const auto forward = verify(am.hypergraph, covers_graph_to_hyper(am, tc.components));
                      if (forward.verified != Verification::Valid || forward.size() != tc.size)
                        return "component cover does not map to a hypergraph cover of equal size";
                      const auto back = covers_hyper_to_graph(am, t.certificate);
                      if (!covers_all_vertices(am.components, g.n(), back) || static_cast<int>(back.size()) > t.size)
                        return "hypergraph cover does not map back to a component cover";
                      return "";
                    }});
  checks.push_back({"collapse", [](const ColouredGraph& g, std::span<const int> w, int) -> std::string {
                      const auto full = build_auxiliary(g);
                      const auto part = build_auxiliary(g, w);
                      const auto t = tau(full.hypergraph);
                      const auto tw = tau(part.hypergraph);
                      if (tw.size > t.size) return "tau grew under collapse";
                      const auto collapsed = verify(part.hypergraph, collapse_cover(full, part, t.certificate));
                      if (collapsed.verified != Verification::Valid || collapsed.size() > t.size)
                        return "collapsed cover invalid or larger";
                      return "";
                    }});
  checks.push_back({"witness-bound", [](const ColouredGraph& g, std::span<const int>, int s) -> std::string {
                      const auto w = witness_set(g, s);
                      if (static_cast<double>(w.size()) > detail::binomial(g.r() - 1 + s, g.r()))
                        return "|W| = " + std::to_string(w.size()) + " exceeds the bound";
                      if (tau_number(build_auxiliary(g, w).hypergraph) < s) return "tau(H(G,W,c)) < s";
                      return "";
                    }});
  checks.push_back({"disjoint-edge", [](const ColouredGraph& g, std::span<const int> w, int) -> std::string {
                      if (disjoint_graph_edge(build_auxiliary(g)) || disjoint_graph_edge(build_auxiliary(g, w)))
                        return "graph edge with disjoint images";
                      return "";
                    }});
  checks.push_back({"frequent-edge", [](const ColouredGraph& g, std::span<const int> w, int) -> std::string {
                      const auto am = build_auxiliary(g, w);
                      for (int size : am.hypergraph.part_sizes())
                        if (size > static_cast<int>(w.size()) + 1) return "part larger than |W| + 1";
                      std::vector<int> all(g.n());
                      std::iota(all.begin(), all.end(), 0);
                      const auto fe = most_frequent_edge(am, all);
                      if (fe.multiplicity < fe.guaranteed) return "most frequent edge below |A| / (|W|+1)^r";
                      return "";
                    }});
  checks.push_back({"lower-bound", [](const ColouredGraph& g, std::span<const int> w, int) -> std::string {
                      const auto am = build_auxiliary(g, w);
                      const auto graph = g.uncoloured();
                      EdgeAssignment ea{am.hypergraph, am.ed, false};
                      if (!check_surjective_homomorphism(graph, intersection_graph(ea.target), ea.map))
                        return "ed is not a surjective homomorphism into the intersection graph";
                      const auto report = verify_lower_bound(graph, ea);
                      if (!report.bound_holds()) return "tree cover below tau(H_0)";
                      return "";
                    }});
  checks.push_back({"adversarial", [gadgets, applicable](const ColouredGraph& g, std::span<const int>, int) -> std::string {
                      const auto graph = g.uncoloured();
                      for (const auto& gadget : gadgets) {
                        const auto& cf = gadget.family;
                        if (cf.host.r() != g.r()) continue;
                        const auto found = find_sparse_independent_set(graph, gadget.m, cf.k + 1, {0, true});
                        if (!found.found()) continue;
                        if (applicable) ++*applicable;
                        const auto ea = build_ed0_from_independent_set(graph, cf.host, found.vertices, cf, cf.k);
                        const auto report = verify_lower_bound(graph, ea);
                        if (!report.bound_holds()) return "constructed colouring covered by fewer than tau(H_0) components";
                      }
                      return "";
                    }});
  return checks;
}

std::string run_check(const NamedCheck& check, const ColouredGraph& g, std::span<const int> w, int s) {
  try {
    return check.run(g, w, s);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

/// Greedy edge deletion while the check keeps failing.
ColouredGraph minimize(const NamedCheck& check, ColouredGraph g, std::span<const int> w, int s) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      auto edges = g.edges();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
      ColouredGraph smaller(g.n(), g.r(), std::move(edges));
      if (!run_check(check, smaller, w, s).empty()) {
        g = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return g;
}

std::string cg_text(const ColouredGraph& g) {
  std::ostringstream out;
  write_cg(out, g);
  return out.str();
}

json header_json(const ExperimentSpec& spec) {
  json j = json::object();
  for (const auto& [key, value] : provenance(spec)) j[key] = key == "spec" ? json::parse(value) : json(value);
  return j;
}

}  // namespace

json run_oracle_corpus(const ExperimentSpec& spec) {
  std::vector<SmallGadget> gadgets;
  for (int r : spec.r_values) gadgets.push_back(small_gadget(r));
  int unused = 0;
  const auto names = oracle_checks(gadgets, &unused);

  struct Outcome {
    std::vector<std::string> failures;  // per check, "" when passed
    int applicable = 0;
    std::string error;
  };
  std::vector<Outcome> outcomes(spec.count);
  parallel_for(spec.count, spec.threads, [&](int i) {
    auto& out = outcomes[i];
    try {
      const auto inst = oracle_instance(spec, i);
      const auto checks = oracle_checks(gadgets, &out.applicable);
      for (const auto& check : checks) out.failures.push_back(run_check(check, inst.graph, inst.w, inst.s));
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  });

  json report = header_json(spec);
  json checks = json::object();
  json failures = json::array();
  int applicable = 0;
  for (std::size_t c = 0; c < names.size(); ++c) checks[names[c].name] = {{"passed", 0}, {"total", 0}};
  int errors = 0;
  for (int i = 0; i < spec.count; ++i) {
    const auto& out = outcomes[i];
    applicable += out.applicable;
    if (!out.error.empty()) {
      ++errors;
      failures.push_back({{"instance", i}, {"check", "generation"}, {"message", out.error}});
      continue;
    }
    for (std::size_t c = 0; c < names.size(); ++c) {
      auto& entry = checks[names[c].name];
      entry["total"] = entry["total"].get<int>() + 1;
      if (out.failures[c].empty()) {
        entry["passed"] = entry["passed"].get<int>() + 1;
        continue;
      }
      const auto inst = oracle_instance(spec, i);
      const auto small = minimize(names[c], inst.graph, inst.w, inst.s);
      failures.push_back({{"instance", i},
                          {"check", names[c].name},
                          {"message", out.failures[c]},
                          {"w", inst.w},
                          {"s", inst.s},
                          {"minimized_cg", cg_text(small)}});
    }
  }
  report["instances"] = spec.count;
  report["generation_errors"] = errors;
  report["checks"] = std::move(checks);
  report["adversarial_applicable"] = applicable;
  report["failures"] = std::move(failures);
  report["all_passed"] = report["failures"].empty();
  return report;
}

// ---------------------------------------------------------------------------
// Level ladder

namespace {

ColouredGraph ladder_colouring(const Graph& g, const ExperimentSpec& spec, std::uint64_t seed) {
  if (spec.colouring == "random") return random_colouring(g, spec.r, seed);
  // Dominant: colour 1 except on a random tenth of the edges, which get a random colour.
  RngStream rng(seed);
  std::vector<ColouredEdge> edges;
  for (auto [u, v] : g.edges()) {
    const bool recolour = rng.uniform() < 0.1;
    const int colour = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.r))) + 1;
    edges.push_back({u, v, recolour ? colour : 1});
  }
  return ColouredGraph(g.n(), spec.r, std::move(edges));
}

json check_json(const ChainCheck& c) {
  json j = {{"holds", c.ok}};
  if (!c.ok) j["witness"] = c.message();
  return j;
}

json ladder_run(const ExperimentSpec& spec, int n, const PPoint& point, int trial) {
  const auto seed = trial_seed(spec.seed, n, trial);
  json j = {{"n", n}, {"coefficient", point.coefficient}, {"p", point.p}, {"trial", trial}, {"seed", seed}};
  if (point.p <= 0) {
    j["status"] = "skipped: the ladder needs p > 0";
    return j;
  }
  const auto sample = sample_gnp({n, point.p, seed});
  const auto g = ladder_colouring(sample.graph, spec, derive_seed(seed, 1));
  const int s = tau_number(build_auxiliary(g).hypergraph);
  const auto w = witness_set(g, s);
  const auto am = build_auxiliary(g, w);
  const auto thresholds = ladder_thresholds(n, point.p);
  const auto chain = build_level_chain(am, spec.k, thresholds);
  const auto props = check_chain_properties(chain);
  json levels = json::array();
  for (const auto& level : chain.levels) levels.push_back(level.edge_count());
  const int tau_h0 = tau_number(am.hypergraph);
  j.update({{"status", "ok"},
            {"s", s},
            {"witness_size", w.size()},
            {"thresholds", thresholds},
            {"level_edges", std::move(levels)},
            {"tau_h0", tau_h0},
            {"nested", props.nested},
            {"P1", check_json(props.p1)},
            {"P2", check_json(props.p2)},
            {"P3", check_json(props.p3)},
            {"chain_verified", props.all()}});
  if (props.all() && spec.k == spec.r) {
    const bool bound = tau_h0 <= spec.r * spec.r;
    const auto matching = top_level_matching(chain);
    j["tau_bound_holds"] = bound;
    j["top_matching_size"] = matching.size();
    if (!bound || static_cast<int>(matching.size()) > spec.r)
      throw CounterexampleFound("verified ladder chain violates the cover bound", to_hg_string(am.hypergraph));
  }
  if (spec.audit_properties) {
    AuditOptions opts;
    opts.seed = derive_seed(seed, 2);
    const auto& graph = sample.graph;
    json audits = json::array();
    audits.push_back(check_large_sets_joined(graph, large_set_threshold(n, point.p), opts));
    audits.push_back(check_common_neighbourhoods(graph, 2, common_neighbourhood_threshold(n, point.p, spec.c), opts));
    audits.push_back(check_neighbourhood_expansion(graph, spec.r - 1, 2, expansion_factor(n, spec.c), opts));
    j["property_audits"] = std::move(audits);
  }
  return j;
}

}  // namespace

json run_level_ladder_audit(const ExperimentSpec& spec) {
  struct Job {
    int n;
    PPoint point;
    int trial;
  };
  std::vector<Job> jobs;
  for (int n : spec.n)
    for (const auto& point : p_points(spec, n))
      for (int t = 0; t < spec.trials; ++t) jobs.push_back({n, point, t});
  std::vector<json> runs(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), spec.threads, [&](int i) {
    const auto& job = jobs[i];
    try {
      runs[i] = ladder_run(spec, job.n, job.point, job.trial);
    } catch (const CounterexampleFound&) {
      throw;
    } catch (const std::exception& e) {
      runs[i] = {{"n", job.n}, {"p", job.point.p}, {"trial", job.trial}, {"status", std::string("error: ") + e.what()}};
    }
  });
  json report = header_json(spec);
  int verified = 0;
  for (const auto& run : runs)
    if (run.value("chain_verified", false)) ++verified;
  report["runs"] = runs;
  report["chains_verified"] = verified;
  report["total"] = runs.size();
  return report;
}

}  // namespace tcover
