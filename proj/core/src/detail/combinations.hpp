#pragma once

#include <numeric>
#include <span>
#include <vector>

namespace tcover::detail {

/// Calls f(span) for every k-subset of {0..n-1} in lexicographic order until f
/// returns false. Returns false iff stopped early.
template <class F>
bool for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(std::span<const int>(idx))) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double value = 1.0;
  for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
  return value;
}

}  // namespace tcover::detail
