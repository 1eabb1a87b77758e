#include "tcover/tree_cover.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

#include <boost/dynamic_bitset.hpp>

#include "tcover/error.hpp"

namespace tcover {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class SetCoverSearch {
 public:
  SetCoverSearch(int universe, std::vector<Bits> sets) : n_(universe), sets_(std::move(sets)) {
    sets_of_.resize(n_);
    for (int s = 0; s < static_cast<int>(sets_.size()); ++s)
      for (auto v = sets_[s].find_first(); v != Bits::npos; v = sets_[s].find_next(v))
        sets_of_[v].push_back(s);
  }

  std::vector<int> solve() {
    Bits uncovered(n_);
    uncovered.set();
    best_ = greedy(uncovered);
    current_.clear();
    branch(uncovered);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  std::vector<int> greedy(Bits uncovered) const {
    std::vector<int> chosen;
    while (uncovered.any()) {
      int pick = -1;
      std::size_t gain = 0;
      for (int s = 0; s < static_cast<int>(sets_.size()); ++s) {
        const auto g = (sets_[s] & uncovered).count();
        if (g > gain) {
          gain = g;
          pick = s;
        }
      }
      chosen.push_back(pick);
      uncovered -= sets_[pick];
    }
    return chosen;
  }

  // Vertices chosen pairwise without a common candidate set each need their own set.
  int packing_bound(const Bits& uncovered) const {
    Bits blocked(n_);
    int count = 0;
    for (auto v = uncovered.find_first(); v != Bits::npos; v = uncovered.find_next(v)) {
      if (blocked.test(v)) continue;
      ++count;
      for (int s : sets_of_[v]) blocked |= sets_[s];
    }
    return count;
  }

  void branch(const Bits& uncovered) {
    if (uncovered.none()) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    const auto depth = static_cast<int>(current_.size());
    if (depth + packing_bound(uncovered) >= static_cast<int>(best_.size())) return;

    std::size_t pivot = Bits::npos;
    std::size_t fewest = ~std::size_t{0};
    for (auto v = uncovered.find_first(); v != Bits::npos; v = uncovered.find_next(v)) {
      if (sets_of_[v].size() < fewest) {
        fewest = sets_of_[v].size();
        pivot = v;
      }
    }
    std::vector<std::pair<std::size_t, int>> options;
    for (int s : sets_of_[pivot]) options.emplace_back((sets_[s] & uncovered).count(), s);
    std::sort(options.begin(), options.end(),
              [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    for (const auto& [gain, s] : options) {
      current_.push_back(s);
      branch(uncovered - sets_[s]);
      current_.pop_back();
    }
  }

  int n_;
  std::vector<Bits> sets_;
  std::vector<std::vector<int>> sets_of_;
  std::vector<int> best_;
  std::vector<int> current_;
};

}  // namespace

ComponentCover tree_cover_number(const ColouredGraph& g) {
  const int n = g.n();
  if (n == 0) return {};
  const auto comps = components(g);

  std::map<std::vector<int>, ComponentRef> unique;
  for (int c = 1; c <= g.r(); ++c) {
    const auto& part = comps.colour(c);
    for (int id = 0; id < part.size(); ++id) unique.try_emplace(part.members[id], ComponentRef{c, id});
  }
  std::vector<Bits> sets;
  std::vector<ComponentRef> refs;
  for (const auto& [members, ref] : unique) {
    Bits bits(n);
    for (int v : members) bits.set(v);
    sets.push_back(std::move(bits));
    refs.push_back(ref);
  }

  SetCoverSearch search(n, std::move(sets));
  ComponentCover cover;
  for (int s : search.solve()) cover.components.push_back(refs[s]);
  std::sort(cover.components.begin(), cover.components.end());
  cover.size = static_cast<int>(cover.components.size());
  return cover;
}

int tc_exact(const Graph& g, int r, const TcOptions& options) {
  if (r < 1) throw InvalidArgument("colour count must be at least 1");
  const auto& pairs = g.edges();
  const std::size_t m = pairs.size();
  if (m == 0) return g.n();

  std::uint64_t total = 1;
  for (std::size_t i = 1; i < m; ++i) {
    if (total > options.max_colourings / static_cast<std::uint64_t>(r)) {
      throw BudgetExceeded("tc_exact: " + std::to_string(r) + "^" + std::to_string(m - 1) +
                           " colourings exceed budget " + std::to_string(options.max_colourings));
    }
    total *= static_cast<std::uint64_t>(r);
  }

  std::atomic<int> best{0};
  const int ceiling = g.n();
  auto worker = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<ColouredEdge> edges(m);
    for (std::uint64_t index = begin; index < end && best.load() < ceiling; ++index) {
      std::uint64_t code = index;
      edges[0] = {pairs[0].first, pairs[0].second, 1};
      for (std::size_t i = 1; i < m; ++i) {
        edges[i] = {pairs[i].first, pairs[i].second, static_cast<int>(code % r) + 1};
        code /= r;
      }
      const int value = tree_cover_number(ColouredGraph(g.n(), r, edges)).size;
      int seen = best.load();
      while (value > seen && !best.compare_exchange_weak(seen, value)) {
      }
    }
  };

  const auto threads = static_cast<std::uint64_t>(std::max(1, options.threads));
  if (threads == 1 || total < threads) {
    worker(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (std::uint64_t t = 0; t < threads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return best.load();
}

}  // namespace tcover
