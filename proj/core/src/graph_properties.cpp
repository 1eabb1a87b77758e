#include "tcover/graph_properties.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include "detail/combinations.hpp"
#include "tcover/error.hpp"
#include "tcover/prng.hpp"

namespace tcover {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

std::vector<Bits> open_rows(const Graph& g) {
  std::vector<Bits> rows(g.n(), Bits(g.n()));
  for (auto [u, v] : g.edges()) {
    rows[u].set(v);
    rows[v].set(u);
  }
  return rows;
}

std::vector<Bits> closed_rows(const Graph& g) {
  auto rows = open_rows(g);
  for (int v = 0; v < g.n(); ++v) rows[v].set(v);
  return rows;
}

/// Uniform k-subset of {0..n-1}, sorted.
std::vector<int> sample_subset(RngStream& rng, int n, int k, std::vector<int>& scratch) {
  scratch.resize(n);
  std::iota(scratch.begin(), scratch.end(), 0);
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(scratch[i], scratch[j]);
  }
  std::vector<int> out(scratch.begin(), scratch.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

class Recorder {
 public:
  Recorder(PropertyReport& report, std::size_t cap) : report_(report), cap_(cap) {}

  void violation(std::vector<int> first, std::vector<int> second, double observed, double required) {
    ++report_.violation_count;
    if (report_.violations.size() < cap_)
      report_.violations.push_back({std::move(first), std::move(second), observed, required});
  }

 private:
  PropertyReport& report_;
  std::size_t cap_;
};

std::string format_params(std::initializer_list<std::pair<const char*, double>> params) {
  std::ostringstream out;
  out.precision(10);
  bool first = true;
  for (const auto& [name, value] : params) {
    if (!first) out << ' ';
    out << name << '=' << value;
    first = false;
  }
  return out.str();
}

}  // namespace

double large_set_threshold(int n, double p) { return 10.0 * std::log(n) / p; }

double common_neighbourhood_threshold(int n, double p, double c) {
  return c / 2.0 * std::log(n) / p;
}

double expansion_factor(int n, double c) { return c * std::log(n) / 6.0; }

PropertyReport check_large_sets_joined(const Graph& g, double min_set_size,
                                       const AuditOptions& options) {
  PropertyReport report;
  report.property = "large-sets-joined";
  const int n = g.n();
  const int s = std::max(1, static_cast<int>(std::ceil(min_set_size)));
  report.parameters = format_params({{"n", double(n)}, {"min_set_size", min_set_size}, {"s", double(s)}});
  if (2 * s > n) {
    // No two disjoint sets of this size exist.
    report.exhaustive = true;
    return report;
  }
  const auto rows = closed_rows(g);
  Recorder record(report, options.max_witnesses);

  auto examine = [&](std::span<const int> a) {
    ++report.cases;
    Bits reach(n);
    for (int v : a) reach |= rows[v];
    const auto outside = static_cast<int>(n - reach.count());
    if (outside >= s) {
      std::vector<int> b;
      for (int v = 0; v < n && static_cast<int>(b.size()) < s; ++v)
        if (!reach.test(v)) b.push_back(v);
      record.violation({a.begin(), a.end()}, std::move(b), outside, s);
    }
  };

  report.candidate_count = detail::binomial(n, s);
  if (report.candidate_count <= static_cast<double>(options.exhaustive_limit)) {
    report.exhaustive = true;
    detail::for_each_combination(n, s, [&](std::span<const int> a) {
      examine(a);
      return true;
    });
  } else {
    RngStream rng(options.seed);
    std::vector<int> scratch;
    for (std::uint64_t i = 0; i < options.samples; ++i) examine(sample_subset(rng, n, s, scratch));
  }
  return report;
}

PropertyReport check_common_neighbourhoods(const Graph& g, int tuple_size, double min_common,
                                           const AuditOptions& options) {
  if (tuple_size < 1) throw InvalidArgument("tuple size must be at least 1");
  PropertyReport report;
  report.property = "common-neighbourhoods";
  const int n = g.n();
  report.parameters = format_params({{"n", double(n)}, {"tuple_size", double(tuple_size)}, {"min_common", min_common}});
  if (tuple_size > n) {
    report.exhaustive = true;
    return report;
  }
  const auto rows = open_rows(g);
  Recorder record(report, options.max_witnesses);

  auto examine = [&](std::span<const int> tuple) {
    ++report.cases;
    Bits common = rows[tuple[0]];
    for (std::size_t i = 1; i < tuple.size(); ++i) common &= rows[tuple[i]];
    const auto size = static_cast<double>(common.count());
    if (size < min_common) record.violation({tuple.begin(), tuple.end()}, {}, size, min_common);
  };

  report.candidate_count = detail::binomial(n, tuple_size);
  if (report.candidate_count <= static_cast<double>(options.exhaustive_limit)) {
    report.exhaustive = true;
    detail::for_each_combination(n, tuple_size, [&](std::span<const int> t) {
      examine(t);
      return true;
    });
  } else {
    RngStream rng(options.seed);
    std::vector<int> scratch;
    for (std::uint64_t i = 0; i < options.samples; ++i)
      examine(sample_subset(rng, n, tuple_size, scratch));
  }
  return report;
}

PropertyReport check_neighbourhood_expansion(const Graph& g, int tuple_size, int max_u,
                                             double factor, const AuditOptions& options) {
  if (tuple_size < 0) throw InvalidArgument("tuple size must be non-negative");
  PropertyReport report;
  report.property = "neighbourhood-expansion";
  const int n = g.n();
  report.parameters = format_params({{"n", double(n)}, {"tuple_size", double(tuple_size)},
                                     {"max_u", double(max_u)}, {"factor", factor}});
  max_u = std::min(max_u, n);
  if (max_u < 1 || tuple_size > n) {
    report.exhaustive = true;
    return report;
  }
  const auto rows = closed_rows(g);
  Recorder record(report, options.max_witnesses);

  auto examine = [&](std::span<const int> u, std::span<const int> tuple) {
    ++report.cases;
    Bits reach(n);
    for (int v : u) reach |= rows[v];
    for (int v : tuple) reach &= rows[v];
    const auto size = static_cast<double>(reach.count());
    const double required = factor * static_cast<double>(u.size());
    if (size < required) record.violation({u.begin(), u.end()}, {tuple.begin(), tuple.end()}, size, required);
  };

  double u_count = 0;
  for (int j = 1; j <= max_u; ++j) u_count += detail::binomial(n, j);
  report.candidate_count = u_count * detail::binomial(n, tuple_size);
  if (report.candidate_count <= static_cast<double>(options.exhaustive_limit)) {
    report.exhaustive = true;
    for (int j = 1; j <= max_u; ++j) {
      detail::for_each_combination(n, j, [&](std::span<const int> u) {
        detail::for_each_combination(n, tuple_size, [&](std::span<const int> t) {
          examine(u, t);
          return true;
        });
        return true;
      });
    }
  } else {
    RngStream rng(options.seed);
    std::vector<int> scratch;
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      const int size = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_u)));
      const auto u = sample_subset(rng, n, size, scratch);
      const auto t = sample_subset(rng, n, tuple_size, scratch);
      examine(u, t);
    }
  }
  return report;
}

void to_json(nlohmann::json& j, const PropertyReport& report) {
  auto witnesses = nlohmann::json::array();
  for (const auto& w : report.violations)
    witnesses.push_back({{"first", w.first}, {"second", w.second}, {"observed", w.observed}, {"required", w.required}});
  j = {{"property", report.property},
       {"parameters", report.parameters},
       {"exhaustive", report.exhaustive},
       {"cases", report.cases},
       {"candidate_count", report.candidate_count},
       {"violation_count", report.violation_count},
       {"result", report.holds() ? "no violation found" : "violated"},
       {"violations", std::move(witnesses)}};
}

}  // namespace tcover
