#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mfc/sparse_matrix.hpp"

namespace mfc {

using BigInt = boost::multiprecision::cpp_int;

/// Rank and nontrivial invariant factors (> 1, ascending, divisibility chain)
/// of an integer matrix.
struct SmithResult {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

namespace detail {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }

inline std::int64_t abs_value(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

/// Dense Smith normal form by unimodular row and column operations. Returns
/// the nonzero diagonal in divisibility order.
template <class Int>
std::vector<Int> dense_smith_diagonal(std::vector<std::vector<Int>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero magnitude in the trailing block becomes the pivot.
    auto bring_min = [&]() -> bool {
      std::size_t bi = m, bj = n;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == m || abs_value(a[i][j]) < best)) {
            best = abs_value(a[i][j]);
            bi = i;
            bj = j;
          }
      if (bi == m) return false;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      return true;
    };
    if (!bring_min()) break;
    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) {
        bring_min();
        continue;
      }
      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] = checked_add(a[t][k], a[i][k]);
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs_value(a[t][t]));
  }
  return diag;
}

/// Sparse elimination on unit pivots, then dense Smith form of the residue.
template <class Int>
SmithResult smith_impl(const SparseMatrix& input) {
  using RowEntry = std::pair<std::uint32_t, Int>;
  const std::size_t nrows = input.rows, ncols = input.cols;
  std::vector<std::vector<RowEntry>> rows(nrows);
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    for (auto [r, v] : input.columns[c]) {
      if (v == 0) continue;
      rows[r].emplace_back(static_cast<std::uint32_t>(c), Int(v));
      col_rows[c].push_back(r);
    }
  for (auto& r : rows) std::sort(r.begin(), r.end(), [](const RowEntry& x, const RowEntry& y) { return x.first < y.first; });
  for (auto& c : col_rows) std::sort(c.begin(), c.end());

  auto col_insert = [&](std::uint32_t c, std::uint32_t r) {
    auto& v = col_rows[c];
    v.insert(std::lower_bound(v.begin(), v.end(), r), r);
  };
  auto col_erase = [&](std::uint32_t c, std::uint32_t r) {
    auto& v = col_rows[c];
    auto it = std::lower_bound(v.begin(), v.end(), r);
    if (it != v.end() && *it == r) v.erase(it);
  };
  auto entry = [&](std::uint32_t r, std::uint32_t c) -> Int {
    const auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const RowEntry& e, std::uint32_t k) { return e.first < k; });
    return (it != row.end() && it->first == c) ? it->second : Int(0);
  };

  SmithResult result;
  std::vector<RowEntry> merged;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::uint32_t c = 0; c < ncols; ++c) {
      if (col_rows[c].empty()) continue;
      std::uint32_t pivot_row = 0;
      std::size_t best_len = SIZE_MAX;
      for (auto r : col_rows[c])
        if (is_unit(entry(r, c)) && rows[r].size() < best_len) {
          best_len = rows[r].size();
          pivot_row = r;
        }
      if (best_len == SIZE_MAX) continue;
      progress = true;
      ++result.rank;
      const Int u = entry(pivot_row, c);
      const auto pivot = rows[pivot_row];
      const auto targets = col_rows[c];
      for (auto r : targets) {
        if (r == pivot_row) continue;
        const Int factor = checked_mul(entry(r, c), u);
        auto& row = rows[r];
        merged.clear();
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < pivot.size()) {
          if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            merged.push_back(row[i++]);
          } else if (i == row.size() || pivot[j].first < row[i].first) {
            Int v = checked_sub(Int(0), checked_mul(factor, pivot[j].second));
            col_insert(pivot[j].first, r);
            merged.emplace_back(pivot[j].first, std::move(v));
            ++j;
          } else {
            Int v = checked_sub(row[i].second, checked_mul(factor, pivot[j].second));
            if (v == 0)
              col_erase(row[i].first, r);
            else
              merged.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
          }
        }
        row.swap(merged);
      }
      for (const auto& e : rows[pivot_row]) col_erase(e.first, pivot_row);
      rows[pivot_row].clear();
    }
  }

  std::vector<std::uint32_t> live_rows, live_cols;
  for (std::uint32_t r = 0; r < nrows; ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (std::uint32_t c = 0; c < ncols; ++c)
    if (!col_rows[c].empty()) live_cols.push_back(c);
  if (!live_rows.empty()) {
    std::vector<std::vector<Int>> dense(live_rows.size(), std::vector<Int>(live_cols.size(), Int(0)));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) {
        auto j = static_cast<std::size_t>(std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin());
        dense[i][j] = v;
      }
    for (const auto& d : dense_smith_diagonal(std::move(dense))) {
      ++result.rank;
      if (d != 1) result.torsion.emplace_back(d);
    }
  }
  std::sort(result.torsion.begin(), result.torsion.end());
  return result;
}

}  // namespace detail

/// Rank and torsion coefficients of an integer matrix. Runs in 64-bit
/// arithmetic and restarts with arbitrary precision if any entry overflows.
inline SmithResult smith(const SparseMatrix& m) {
  try {
    return detail::smith_impl<std::int64_t>(m);
  } catch (const detail::Overflow&) {
    return detail::smith_impl<BigInt>(m);
  }
}

/// Forces the arbitrary-precision path.
inline SmithResult smith_bigint(const SparseMatrix& m) { return detail::smith_impl<BigInt>(m); }

}  // namespace mfc
