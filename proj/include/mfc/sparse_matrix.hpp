#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace mfc {

/// Column-major sparse integer matrix. Each column holds (row, value) pairs
/// sorted by row with no zero values once normalized.
struct SparseMatrix {
  using Entry = std::pair<std::uint32_t, std::int64_t>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  void add(std::uint32_t row, std::size_t col, std::int64_t value) { columns[col].emplace_back(row, value); }

  /// Sorts each column, merges repeated rows and drops zeros.
  void normalize() {
    for (auto& col : columns) {
      std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
      std::size_t w = 0;
      for (std::size_t r = 0; r < col.size();) {
        auto row = col[r].first;
        std::int64_t sum = 0;
        for (; r < col.size() && col[r].first == row; ++r) sum += col[r].second;
        if (sum != 0) col[w++] = {row, sum};
      }
      col.resize(w);
    }
  }

  [[nodiscard]] std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
  }
};

/// Exact product a*b over the integers (or its parity when mod2 is set).
/// Used to confirm that consecutive boundary maps compose to zero.
inline bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b, bool mod2) {
  std::vector<std::int64_t> acc(a.rows, 0);
  std::vector<std::uint32_t> touched;
  for (const auto& col : b.columns) {
    for (auto [k, bv] : col)
      for (auto [r, av] : a.columns[k]) {
        if (acc[r] == 0) touched.push_back(r);
        acc[r] += av * bv;
      }
    bool zero = true;
    for (auto r : touched) {
      if (mod2 ? (acc[r] % 2 != 0) : (acc[r] != 0)) zero = false;
      acc[r] = 0;
    }
    touched.clear();
    if (!zero) return false;
  }
  return true;
}

}  // namespace mfc
