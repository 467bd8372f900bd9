#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace dirset::detail {

// Unordered pairs (i < j) of [0, n), linearly indexed in lexicographic
// order. Row i starts at i*n - i*(i+1)/2.
inline std::uint64_t pair_count(std::uint64_t n) { return n * (n - 1) / 2; }

inline std::pair<std::uint64_t, std::uint64_t> pair_unrank(std::uint64_t idx, std::uint64_t n) {
  const double nd = static_cast<double>(n);
  const double approx =
      nd - 0.5 - std::sqrt((nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(idx));
  std::uint64_t i = approx <= 0.0 ? 0 : static_cast<std::uint64_t>(approx);
  if (i >= n) i = n - 1;
  const auto row_start = [n](std::uint64_t r) { return r * n - r * (r + 1) / 2; };
  while (i > 0 && row_start(i) > idx) --i;
  while (i + 1 < n && row_start(i + 1) <= idx) ++i;
  return {i, i + 1 + (idx - row_start(i))};
}

}  // namespace dirset::detail
