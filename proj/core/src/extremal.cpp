#include "tcover/extremal.hpp"

#include <algorithm>

#include "tcover/chain.hpp"
#include "tcover/cover_family.hpp"
#include "tcover/enumerate.hpp"
#include "tcover/error.hpp"
#include "tcover/fixtures.hpp"
#include "tcover/vertex_cover.hpp"

namespace tcover {

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::IntersectingCovers:
      return "hi";
    case Quantity::Coverable:
      return "Hi";
    case Quantity::CoverThreshold:
      return "kc";
  }
  return "?";
}

Quantity parse_quantity(const std::string& name) {
  if (name == "hi") return Quantity::IntersectingCovers;
  if (name == "Hi") return Quantity::Coverable;
  if (name == "kc") return Quantity::CoverThreshold;
  throw InvalidArgument("unknown quantity '" + name + "' (expected hi, Hi or kc)");
}

void to_json(nlohmann::json& j, const ExtremalCaps& caps) {
  j = {{"max_part", caps.max_part},
       {"max_edges", caps.max_edges},
       {"include_fixtures", caps.include_fixtures},
       {"audit_all", caps.audit_all},
       {"max_nodes", caps.max_nodes}};
  if (caps.max_k >= 0) j["max_k"] = caps.max_k;
}

void to_json(nlohmann::json& j, const ExtremalCertificate& c) {
  j = {{"tau", c.tau}, {"source", c.source}, {"hg", to_hg_string(c.hypergraph)}, {"witness", c.witness}};
}

void to_json(nlohmann::json& j, const ExtremalReport& report) {
  j = {{"quantity", to_string(report.quantity)},
       {"r", report.r},
       {report.quantity == Quantity::CoverThreshold ? "t" : "k", report.parameter},
       {"caps", report.caps},
       {"lower_bound", report.lower_bound},
       {"exhaustive_within_caps", report.exhaustive},
       {"exact", report.exact()},
       {"instances", report.instances},
       {"checked", report.checked},
       {"accepted", report.accepted},
       {"certificates", report.certificates}};
  j["upper_bound"] = report.upper_bound ? nlohmann::json(*report.upper_bound) : nlohmann::json();
  if (report.quantity == Quantity::CoverThreshold)
    j["value_within_caps"] = report.value_within_caps ? nlohmann::json(*report.value_within_caps) : nlohmann::json();
  if (report.tau_filtered > 0 || report.quantity == Quantity::Coverable) j["tau_filtered"] = report.tau_filtered;
  if (!report.note.empty()) j["note"] = report.note;
}

namespace {

ExtremalReport make_report(Quantity q, int r, int parameter, const ExtremalCaps& caps) {
  ExtremalReport report;
  report.quantity = q;
  report.r = r;
  report.parameter = parameter;
  report.caps = caps;
  return report;
}

struct Candidate {
  PartiteHypergraph h;
  std::string source;
};

std::vector<Candidate> fixtures_for(int r) {
  std::vector<Candidate> out;
  out.push_back({fixtures::disjoint_edges(r, r), "disjoint-edges"});
  if (r == 3) {
    out.push_back({fixtures::disjoint_edges(3, 4), "disjoint-edges-4"});
    out.push_back({fixtures::ems_augmented(), "ems-augmented"});
  }
  return out;
}

/// Calls f(h, source) on every enumerated class within the caps, then on the fixtures.
template <class F>
void for_each_instance(int r, const ExtremalCaps& caps, ExtremalReport& report, F&& f) {
  EnumerateOptions opts;
  opts.r = r;
  opts.max_part = caps.max_part;
  opts.max_edges = caps.max_edges;
  opts.part_permutations = true;
  enumerate(opts, nullptr, [&](const PartiteHypergraph& h) {
    ++report.instances;
    f(h, "enumeration");
    return true;
  });
  report.exhaustive = true;
  if (caps.include_fixtures)
    for (const auto& c : fixtures_for(r)) f(c.h, c.source);
}

void check_ceiling(const PartiteHypergraph& h, int tau, int ceiling, const std::string& what) {
  if (tau > ceiling)
    throw CounterexampleFound(what + ": tau = " + std::to_string(tau) + " exceeds " + std::to_string(ceiling),
                              to_hg_string(h));
}

ExtremalReport max_tau(Quantity quantity, int r, int k, const ExtremalCaps& caps) {
  if (k < r) throw ArityTooSmall("k = " + std::to_string(k) + " is below r = " + std::to_string(r));
  auto report = make_report(quantity, r, k, caps);
  // hi <= Hi since a family S is a chain (H, S) with m = 1, and Hi_r(k) <= Hi_r(r) <= r^2.
  report.upper_bound = r * r;
  FamilySearchOptions family_opts{caps.max_nodes};
  ChainSearchOptions chain_opts{-1, caps.max_nodes};
  int best = -1;
  for_each_instance(r, caps, report, [&](const PartiteHypergraph& h, const std::string& source) {
    const int t = tau_number(h);
    if (!caps.audit_all && t <= best) return;
    ++report.checked;
    nlohmann::json witness;
    if (quantity == Quantity::IntersectingCovers) {
      auto cf = search_cover_family(h, k, CoverMode::Strict, family_opts);
      if (!cf) return;
      check_ceiling(h, t, r * (2 * r - 1), "instance with intersecting " + std::to_string(k) + "-covers");
      witness = *cf;
    } else {
      auto chain = search_chain(h, k, chain_opts);
      if (!chain) return;
      witness = *chain;
    }
    ++report.accepted;
    check_ceiling(h, t, r * r, "accepted instance");
    if (t > best) {
      best = t;
      report.certificates = {{t, h, std::move(witness), source}};
    }
  });
  report.lower_bound = std::max(best, 0);
  return report;
}

ExtremalReport cover_threshold(int r, int t, const ExtremalCaps& caps) {
  if (t < 0) throw InvalidArgument("t must be non-negative");
  auto report = make_report(Quantity::CoverThreshold, r, t, caps);
  std::vector<Candidate> pool;
  for_each_instance(r, caps, report, [&](const PartiteHypergraph& h, const std::string& source) {
    if (tau_number(h) > t) pool.push_back({h, source});
  });
  const int max_k = caps.max_k >= 0 ? caps.max_k : r + 3;
  FamilySearchOptions family_opts{caps.max_nodes};
  report.lower_bound = r;
  // Intersecting k-covers imply intersecting (k-1)-covers, so certificates stop at the
  // first k without one.
  for (int k = r; k <= max_k; ++k) {
    std::optional<ExtremalCertificate> found;
    for (const auto& c : pool) {
      ++report.checked;
      if (auto cf = search_cover_family(c.h, k, CoverMode::Strict, family_opts)) {
        found = ExtremalCertificate{tau_number(c.h), c.h, *cf, c.source};
        break;
      }
    }
    if (!found) {
      report.value_within_caps = k;
      return report;
    }
    ++report.accepted;
    report.certificates.push_back(std::move(*found));
    report.lower_bound = k + 1;
  }
  report.note = "every k up to " + std::to_string(max_k) + " has a certificate";
  return report;
}

}  // namespace

ExtremalReport compute_extremal(Quantity quantity, int r, int parameter, const ExtremalCaps& caps) {
  if (r < 2) throw InvalidArgument("r must be at least 2");
  if (quantity == Quantity::CoverThreshold) return cover_threshold(r, parameter, caps);
  return max_tau(quantity, r, parameter, caps);
}

ExtremalReport refute_4m_coverable(const ExtremalCaps& caps) {
  auto report = make_report(Quantity::Coverable, 3, 4, caps);
  report.upper_bound = 3;
  ChainSearchOptions chain_opts{-1, caps.max_nodes};
  for_each_instance(3, caps, report, [&](const PartiteHypergraph& h, const std::string& source) {
    const int t = tau_number(h);
    if (t < 4) {
      if (caps.audit_all) {
        ++report.checked;
        if (search_chain(h, 4, chain_opts)) {
          ++report.accepted;
          report.lower_bound = std::max(report.lower_bound, t);
        }
      }
      return;
    }
    ++report.tau_filtered;
    ++report.checked;
    if (auto chain = search_chain(h, 4, chain_opts))
      throw CounterexampleFound("(4," + std::to_string(chain->m()) + ")-coverable instance with tau = " +
                                    std::to_string(t) + " from " + source,
                                to_hg_string(h));
  });
  report.note = "no chain for k = 4 on any instance with tau >= 4 (" + std::to_string(report.tau_filtered) + " checked)";
  return report;
}

}  // namespace tcover
