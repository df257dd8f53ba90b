#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mfc/sparse_matrix.hpp"

namespace mfc {

/// Rank over F2 by column reduction. A column is reduced against the stored
/// pivot column owning its lowest row index until that row is free.
inline std::size_t rank_mod2(const SparseMatrix& m) {
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> owner(m.rows, kNone);
  std::vector<std::vector<std::uint32_t>> pivots;
  std::vector<std::uint32_t> col, scratch;
  for (const auto& entries : m.columns) {
    col.clear();
    for (auto [r, v] : entries)
      if (v % 2 != 0) col.push_back(r);
    while (!col.empty()) {
      const auto low = col.front();
      if (owner[low] == kNone) {
        owner[low] = static_cast<std::uint32_t>(pivots.size());
        pivots.push_back(col);
        break;
      }
      const auto& p = pivots[owner[low]];
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < p.size()) {
        if (j == p.size() || (i < col.size() && col[i] < p[j])) {
          scratch.push_back(col[i++]);
        } else if (i == col.size() || p[j] < col[i]) {
          scratch.push_back(p[j++]);
        } else {
          ++i;
          ++j;
        }
      }
      col.swap(scratch);
    }
  }
  return pivots.size();
}

}  // namespace mfc
