#include "tcover/vertex_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json.hpp>

#include "tcover/error.hpp"

namespace tcover {

const char* to_string(Verification v) {
  switch (v) {
    case Verification::Unverified: return "unverified";
    case Verification::Valid: return "valid";
    case Verification::Invalid: return "invalid";
  }
  return "?";
}

void to_json(nlohmann::json& j, const CoverCertificate& c) {
  j = {{"vertices", c.vertices}, {"size", c.size()}, {"verified", to_string(c.verified)}};
}

bool is_cover(const PartiteHypergraph& h, std::span<const Vertex> vertices) {
  for (const auto& e : h.edges()) {
    bool hit = false;
    for (const auto& v : vertices) {
      if (contains(e, v)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

CoverCertificate verify(const PartiteHypergraph& h, CoverCertificate cert) {
  cert.verified = is_cover(h, cert.vertices) ? Verification::Valid : Verification::Invalid;
  return cert;
}

namespace {

// Edge sets as one machine word when there are at most 64 edges.
struct WordOps {
  using Mask = std::uint64_t;
  static Mask make(int) { return 0; }
  static Mask full(int m) { return m == 64 ? ~Mask{0} : (Mask{1} << m) - 1; }
  static void set(Mask& s, int i) { s |= Mask{1} << i; }
  static bool test(const Mask& s, int i) { return (s >> i) & 1U; }
  static bool none(const Mask& s) { return s == 0; }
  static Mask minus(const Mask& a, const Mask& b) { return a & ~b; }
  static void add(Mask& a, const Mask& b) { a |= b; }
  template <class F>
  static void for_each(Mask s, F&& f) {
    while (s) {
      f(std::countr_zero(s));
      s &= s - 1;
    }
  }
};

struct BitsetOps {
  using Mask = boost::dynamic_bitset<std::uint64_t>;
  static Mask make(int m) { return Mask(m); }
  static Mask full(int m) {
    Mask s(m);
    s.set();
    return s;
  }
  static void set(Mask& s, int i) { s.set(i); }
  static bool test(const Mask& s, int i) { return s.test(i); }
  static bool none(const Mask& s) { return s.none(); }
  static Mask minus(const Mask& a, const Mask& b) { return a - b; }
  static void add(Mask& a, const Mask& b) { a |= b; }
  template <class F>
  static void for_each(const Mask& s, F&& f) {
    for (auto i = s.find_first(); i != Mask::npos; i = s.find_next(i)) f(static_cast<int>(i));
  }
};

template <class Ops>
class CoverSolver {
 public:
  using Mask = typename Ops::Mask;

  explicit CoverSolver(const PartiteHypergraph& h) : h_(h), m_(h.edge_count()) {
    offsets_.push_back(0);
    for (int s : h.part_sizes()) offsets_.push_back(offsets_.back() + s);
    incident_.assign(offsets_.back(), Ops::make(m_));
    edge_vertices_.resize(m_);
    for (int e = 0; e < m_; ++e) {
      for (int p = 0; p < h.r(); ++p) {
        const int v = offsets_[p] + h.edge(e)[p];
        edge_vertices_[e].push_back(v);
        Ops::set(incident_[v], e);
      }
    }
  }

  Mask all() const { return Ops::full(m_); }
  int vertex_count() const { return offsets_.back(); }
  const Mask& incident(int v) const { return incident_[v]; }

  Vertex vertex(int id) const {
    int p = 0;
    while (offsets_[p + 1] <= id) ++p;
    return {p, id - offsets_[p]};
  }

  // Edges in `uncovered`, pairwise disjoint, picked greedily in id order.
  int packing_bound(const Mask& uncovered) const {
    Mask blocked = Ops::make(m_);
    int count = 0;
    Ops::for_each(uncovered, [&](int e) {
      if (Ops::test(blocked, e)) return;
      ++count;
      for (int v : edge_vertices_[e]) Ops::add(blocked, incident_[v]);
    });
    return count;
  }

  // Can `uncovered` be covered by at most `budget` vertices with id >= min_vertex?
  bool coverable(const Mask& uncovered, int budget, int min_vertex) const {
    if (Ops::none(uncovered)) return true;
    if (budget <= 0) return false;
    if (packing_bound(uncovered) > budget) return false;

    int pivot = -1;
    int fewest = h_.r() + 1;
    Ops::for_each(uncovered, [&](int e) {
      if (fewest == 0) return;
      int admissible = 0;
      for (int v : edge_vertices_[e]) admissible += v >= min_vertex;
      if (admissible < fewest) {
        fewest = admissible;
        pivot = e;
      }
    });
    if (fewest == 0) return false;
    for (int v : edge_vertices_[pivot]) {
      if (v < min_vertex) continue;
      if (coverable(Ops::minus(uncovered, incident_[v]), budget - 1, min_vertex)) return true;
    }
    return false;
  }

  int minimum(const Mask& uncovered) const {
    int t = packing_bound(uncovered);
    while (!coverable(uncovered, t, 0)) ++t;
    return t;
  }

  std::vector<Vertex> least_cover(int size) const {
    std::vector<Vertex> out;
    Mask uncovered = all();
    int next = 0;
    for (int slot = 0; slot < size; ++slot) {
      for (int v = next;; ++v) {
        if (v >= vertex_count()) throw InternalError("tau: certificate construction failed");
        Mask rest = Ops::minus(uncovered, incident_[v]);
        if (coverable(rest, size - slot - 1, v + 1)) {
          out.push_back(vertex(v));
          uncovered = std::move(rest);
          next = v + 1;
          break;
        }
      }
    }
    return out;
  }

  std::vector<int> critical(int t) const {
    Mask kept = all();
    if (coverable(kept, t - 1, 0)) throw TargetUnreachable("cover number is below " + std::to_string(t));
    for (int e = 0; e < m_; ++e) {
      Mask without = kept;
      if constexpr (std::is_same_v<Mask, std::uint64_t>) {
        without &= ~(Mask{1} << e);
      } else {
        without.reset(e);
      }
      if (!coverable(without, t - 1, 0)) kept = std::move(without);
    }
    std::vector<int> ids;
    Ops::for_each(kept, [&](int e) { ids.push_back(e); });
    return ids;
  }

 private:
  const PartiteHypergraph& h_;
  int m_;
  std::vector<int> offsets_;
  std::vector<Mask> incident_;
  std::vector<std::vector<int>> edge_vertices_;
};

template <class F>
auto with_solver(const PartiteHypergraph& h, F&& f) {
  if (h.edge_count() <= 64) return f(CoverSolver<WordOps>(h));
  return f(CoverSolver<BitsetOps>(h));
}

}  // namespace

TauResult tau(const PartiteHypergraph& h) {
  return with_solver(h, [&](const auto& solver) {
    TauResult result;
    result.size = solver.minimum(solver.all());
    result.certificate = verify(h, {solver.least_cover(result.size), Verification::Unverified});
    if (result.certificate.verified != Verification::Valid)
      throw InternalError("tau: solver produced an invalid cover");
    return result;
  });
}

int tau_number(const PartiteHypergraph& h) {
  return with_solver(h, [&](const auto& solver) { return solver.minimum(solver.all()); });
}

bool cover_number_at_most(const PartiteHypergraph& h, int t) {
  return with_solver(h, [&](const auto& solver) { return solver.coverable(solver.all(), t, 0); });
}

std::vector<int> critical_edge_ids(const PartiteHypergraph& h, int t) {
  if (t < 0) throw InvalidArgument("target cover number must be non-negative");
  if (t == 0) return {};
  return with_solver(h, [&](const auto& solver) { return solver.critical(t); });
}

PartiteHypergraph critical_subgraph(const PartiteHypergraph& h, int t) {
  const auto ids = critical_edge_ids(h, t);
  return h.subgraph(ids);
}

}  // namespace tcover
