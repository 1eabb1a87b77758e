#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tcover/error.hpp"

namespace tcover::detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Bron-Kerbosch with Tomita pivoting over `adj` (no self-loops). `viable(R | P)`
/// may reject a branch early; `visit(R)` sees each maximal clique and returns false
/// to stop. Branches are explored in increasing vertex order, so the order of visits
/// is deterministic. Throws BudgetExceeded after `max_nodes` calls.
template <class Viable, class Visit>
class MaximalCliques {
 public:
  MaximalCliques(const std::vector<Bits>& adj, std::uint64_t max_nodes, Viable viable, Visit visit)
      : adj_(adj), max_nodes_(max_nodes), viable_(viable), visit_(visit) {}

  /// Returns false if stopped by the visitor.
  bool run() {
    const auto n = adj_.size();
    Bits r(n), p(n), x(n);
    p.set();
    return expand(r, p, x);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool expand(Bits& r, Bits p, Bits x) {
    if (++nodes_ > max_nodes_) throw BudgetExceeded("maximal clique search exceeded its node budget");
    if (p.none()) {
      if (x.none()) return visit_(r);
      return true;
    }
    if (!viable_(r | p)) return true;
    // Pivot: vertex of P | X with most neighbours in P.
    std::size_t pivot = Bits::npos;
    std::size_t best = 0;
    const Bits px = p | x;
    for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      const auto c = (p & adj_[u]).count();
      if (pivot == Bits::npos || c > best) {
        best = c;
        pivot = u;
      }
    }
    const Bits branch = p - adj_[pivot];
    for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
      r.set(v);
      const bool go_on = expand(r, p & adj_[v], x & adj_[v]);
      r.reset(v);
      if (!go_on) return false;
      p.reset(v);
      x.set(v);
    }
    return true;
  }

  const std::vector<Bits>& adj_;
  std::uint64_t max_nodes_;
  Viable viable_;
  Visit visit_;
  std::uint64_t nodes_ = 0;
};

template <class Viable, class Visit>
MaximalCliques(const std::vector<Bits>&, std::uint64_t, Viable, Visit) -> MaximalCliques<Viable, Visit>;

}  // namespace tcover::detail
