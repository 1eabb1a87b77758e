#include "tcover/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tcover/error.hpp"

namespace tcover {

namespace {

std::uint64_t factorial_capped(int n, std::uint64_t cap) {
  std::uint64_t value = 1;
  for (int i = 2; i <= n; ++i) {
    if (value > cap / static_cast<std::uint64_t>(i)) return cap + 1;
    value *= static_cast<std::uint64_t>(i);
  }
  return value;
}

std::uint64_t group_size(const std::vector<int>& sizes, bool part_permutations, std::uint64_t cap) {
  std::uint64_t total = part_permutations ? factorial_capped(static_cast<int>(sizes.size()), cap) : 1;
  for (int s : sizes) {
    const auto f = factorial_capped(s, cap);
    if (f > cap || total > cap / f) return cap + 1;
    total *= f;
  }
  return total;
}

/// Calls f(part_order, perms) for every element of the relabelling group: perms[i]
/// relabels part i, part_order[i] says which old part becomes new part i.
template <class F>
void for_each_relabelling(const std::vector<int>& sizes, bool part_permutations, F&& f) {
  const int r = static_cast<int>(sizes.size());
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<std::vector<int>> perms(r);
    for (int i = 0; i < r; ++i) {
      perms[i].resize(sizes[i]);
      std::iota(perms[i].begin(), perms[i].end(), 0);
    }
    while (true) {
      f(order, perms);
      int i = r - 1;
      while (i >= 0 && !std::next_permutation(perms[i].begin(), perms[i].end())) --i;
      if (i < 0) break;
    }
  } while (part_permutations && std::next_permutation(order.begin(), order.end()));
}

class OrderlyGenerator {
 public:
  OrderlyGenerator(const EnumerateOptions& options, const MaskVisitor& visit)
      : options_(options), space_(options.r, options.max_part), visit_(visit) {
    const std::vector<int> sizes(options.r, options.max_part);
    if (group_size(sizes, options.part_permutations, options.max_group_size) > options.max_group_size)
      throw BudgetExceeded("enumerate: relabelling group exceeds " + std::to_string(options.max_group_size));
    if (options.shard_count < 1 || options.shard < 0 || options.shard >= options.shard_count)
      throw InvalidArgument("enumerate: bad shard index");

    const int m = space_.size();
    for_each_relabelling(sizes, options.part_permutations,
                         [&](const std::vector<int>& order, const std::vector<std::vector<int>>& perms) {
                           std::vector<std::uint8_t> image(m);
                           bool identity = true;
                           for (int i = 0; i < m; ++i) {
                             const Edge e = space_.edge(i);
                             Edge g(options.r);
                             for (int p = 0; p < options.r; ++p) g[p] = perms[order[p]][e[order[p]]];
                             image[i] = static_cast<std::uint8_t>(space_.index(g));
                             identity = identity && image[i] == i;
                           }
                           if (!identity) images_.insert(images_.end(), image.begin(), image.end());
                         });
    meets_.resize(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (intersects(space_.edge(i), space_.edge(j))) meets_[i] |= std::uint64_t{1} << j;
  }

  EnumerationStats run() {
    if (options_.shard == 0) {
      if (!emit(0)) return stats_;
    }
    descend(0, -1);
    return stats_;
  }

 private:
  bool canonical(std::uint64_t mask) const {
    const int m = space_.size();
    const std::size_t count = images_.size() / m;
    for (std::size_t g = 0; g < count; ++g) {
      const std::uint8_t* image = images_.data() + g * m;
      std::uint64_t moved = 0;
      for (std::uint64_t s = mask; s; s &= s - 1) moved |= std::uint64_t{1} << image[std::countr_zero(s)];
      const std::uint64_t diff = moved ^ mask;
      if (diff && !(mask & (diff & -diff))) return false;
    }
    return true;
  }

  bool emit(std::uint64_t mask) {
    ++stats_.canonical;
    return visit_(mask);
  }

  // Returns false when the visitor asked to stop.
  bool descend(std::uint64_t mask, int last) {
    const int size = std::popcount(mask);
    if (options_.max_edges >= 0 && size >= options_.max_edges) return true;
    for (int e = last + 1; e < space_.size(); ++e) {
      if (options_.pairwise_intersecting_only && (mask & ~meets_[e])) continue;
      const std::uint64_t child = mask | (std::uint64_t{1} << e);
      if (!canonical(child)) continue;
      if (size + 1 == 2) {
        const bool mine = shard_counter_++ % static_cast<std::uint64_t>(options_.shard_count) ==
                          static_cast<std::uint64_t>(options_.shard);
        if (!mine) continue;
      }
      if (size + 1 >= 2 || options_.shard == 0) {
        if (!emit(child)) return false;
      }
      if (!descend(child, e)) return false;
    }
    return true;
  }

  EnumerateOptions options_;
  EdgeSpace space_;
  const MaskVisitor& visit_;
  std::vector<std::uint8_t> images_;  // non-identity group elements, space_.size() bytes each
  std::vector<std::uint64_t> meets_;
  std::uint64_t shard_counter_ = 0;
  EnumerationStats stats_;
};

}  // namespace

EdgeSpace::EdgeSpace(int r, int max_part) : r_(r), max_part_(max_part), size_(1) {
  if (r < 2) throw InvalidArgument("enumerate: r must be at least 2");
  if (max_part < 1) throw InvalidArgument("enumerate: max_part must be positive");
  for (int i = 0; i < r; ++i) {
    if (size_ > 64 / max_part) throw BudgetExceeded("enumerate: max_part^r exceeds 64 edges");
    size_ *= max_part;
  }
}

Edge EdgeSpace::edge(int index) const {
  Edge e(r_);
  for (int p = r_ - 1; p >= 0; --p) {
    e[p] = index % max_part_;
    index /= max_part_;
  }
  return e;
}

int EdgeSpace::index(const Edge& e) const {
  int value = 0;
  for (int x : e) value = value * max_part_ + x;
  return value;
}

PartiteHypergraph EdgeSpace::to_hypergraph(std::uint64_t mask) const {
  std::vector<Edge> edges;
  for (std::uint64_t s = mask; s; s &= s - 1) edges.push_back(edge(std::countr_zero(s)));
  return PartiteHypergraph(std::vector<int>(r_, max_part_), std::move(edges));
}

std::uint64_t EdgeSpace::to_mask(const PartiteHypergraph& h) const {
  if (h.r() != r_) throw InvalidArgument("edge space: part count mismatch");
  for (int s : h.part_sizes())
    if (s > max_part_) throw InvalidArgument("edge space: part larger than max_part");
  std::uint64_t mask = 0;
  for (const auto& e : h.edges()) mask |= std::uint64_t{1} << index(e);
  return mask;
}

EnumerationStats enumerate_masks(const EnumerateOptions& options, const MaskVisitor& visit) {
  auto stats = OrderlyGenerator(options, visit).run();
  stats.emitted = stats.canonical;
  return stats;
}

EnumerationStats enumerate(const EnumerateOptions& options, const HypergraphPredicate& predicate,
                           const HypergraphVisitor& visit) {
  const EdgeSpace space(options.r, options.max_part);
  std::uint64_t emitted = 0;
  auto stats = enumerate_masks(options, [&](std::uint64_t mask) {
    const auto h = space.to_hypergraph(mask);
    if (predicate && !predicate(h)) return true;
    ++emitted;
    return visit(h);
  });
  stats.emitted = emitted;
  return stats;
}

CanonicalForm canonical_form(const PartiteHypergraph& h, const CanonicalOptions& options) {
  std::vector<int> sizes = h.part_sizes();
  std::vector<Edge> edges = h.edges();
  if (options.ignore_isolated) {
    for (int p = 0; p < h.r(); ++p) {
      std::vector<int> relabel(sizes[p], -1);
      for (const auto& e : edges) relabel[e[p]] = 0;
      int next = 0;
      for (auto& x : relabel)
        if (x == 0) x = next++;
      for (auto& e : edges) e[p] = relabel[e[p]];
      sizes[p] = next;
    }
  }
  if (group_size(sizes, options.part_permutations, options.max_group_size) > options.max_group_size)
    throw BudgetExceeded("canonical form: relabelling group too large");

  CanonicalForm best;
  bool first = true;
  const int r = h.r();
  for_each_relabelling(sizes, options.part_permutations,
                       [&](const std::vector<int>& order, const std::vector<std::vector<int>>& perms) {
                         CanonicalForm candidate;
                         candidate.part_sizes.resize(r);
                         for (int p = 0; p < r; ++p) candidate.part_sizes[p] = sizes[order[p]];
                         candidate.edges.reserve(edges.size());
                         for (const auto& e : edges) {
                           Edge g(r);
                           for (int p = 0; p < r; ++p) g[p] = perms[order[p]][e[order[p]]];
                           candidate.edges.push_back(std::move(g));
                         }
                         std::sort(candidate.edges.begin(), candidate.edges.end());
                         if (first || candidate < best) {
                           best = std::move(candidate);
                           first = false;
                         }
                       });
  return best;
}

bool isomorphic(const PartiteHypergraph& a, const PartiteHypergraph& b, const CanonicalOptions& options) {
  if (a.r() != b.r() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, options) == canonical_form(b, options);
}

}  // namespace tcover
