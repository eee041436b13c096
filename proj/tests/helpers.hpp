#pragma once

#include <random>
#include <vector>

#include "colorideals/coloring.hpp"

namespace testutil {

inline colorideals::Coloring random_coloring(std::mt19937& rng, int n, int colors) {
  std::uniform_int_distribution<int> pick(1, colors);
  std::vector<colorideals::Color> e(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (auto& c : e) c = static_cast<colorideals::Color>(pick(rng));
  return colorideals::Coloring(n, colors, std::move(e));
}

/// Every coloring of size n with the given number of colors.
inline std::vector<colorideals::Coloring> all_colorings(int n, int colors) {
  const std::size_t m = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  std::vector<colorideals::Color> e(m, 1);
  std::vector<colorideals::Coloring> out;
  while (true) {
    out.emplace_back(n, colors, e);
    std::size_t i = 0;
    while (i < m && e[i] == colors) e[i++] = 1;
    if (i == m) break;
    ++e[i];
  }
  return out;
}

/// Direct definition: some increasing injection raising every edge color.
inline bool contains_by_subsets(const colorideals::ColorPoset& p, const colorideals::Coloring& a,
                                const colorideals::Coloring& b) {
  const int m = a.n();
  const int n = b.n();
  if (m > n) return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<int> f;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) f.push_back(v + 1);
    bool ok = true;
    for (int j = 2; j <= m && ok; ++j)
      for (int i = 1; i < j && ok; ++i) ok = p.leq(a.at(i, j), b.at(f[i - 1], f[j - 1]));
    if (ok) return true;
  }
  return false;
}

}  // namespace testutil
