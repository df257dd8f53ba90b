#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// beyond the input complex, so agreement is meaningful.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mfc/simplicial_complex.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;

/// Face poset with faces stored as vertex bitmasks.
struct Poset {
  std::vector<std::uint64_t> faces;
  std::vector<std::pair<int, int>> arcs;  // (upper, lower)
  std::vector<int> dim;
};

inline Poset poset_from_facets(const std::vector<std::vector<int>>& facets) {
  std::set<std::uint64_t> all;
  for (const auto& f : facets) {
    std::uint64_t mask = 0;
    for (int v : f) mask |= std::uint64_t{1} << v;
    for (std::uint64_t sub = mask; sub; sub = (sub - 1) & mask) all.insert(sub);
  }
  Poset P;
  P.faces.assign(all.begin(), all.end());
  std::stable_sort(P.faces.begin(), P.faces.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::map<std::uint64_t, int> index;
  for (int i = 0; i < static_cast<int>(P.faces.size()); ++i) {
    index[P.faces[i]] = i;
    P.dim.push_back(std::popcount(P.faces[i]) - 1);
  }
  for (int i = 0; i < static_cast<int>(P.faces.size()); ++i) {
    if (std::popcount(P.faces[i]) < 2) continue;
    for (std::uint64_t rest = P.faces[i]; rest; rest &= rest - 1) {
      const std::uint64_t bit = rest & (~rest + 1);
      P.arcs.emplace_back(i, index.at(P.faces[i] ^ bit));
    }
  }
  return P;
}

/// Facets of a library complex as vertex index lists.
inline std::vector<std::vector<int>> facets_of(const mfc::SimplicialComplex& X) {
  std::vector<std::vector<int>> out;
  for (const auto& s : X.facets()) out.emplace_back(s.begin(), s.end());
  return out;
}

inline Poset poset_of(const mfc::SimplicialComplex& X) { return poset_from_facets(facets_of(X)); }

/// All matchings (arc index sets, ascending), the empty one included.
inline std::vector<std::vector<int>> matchings(const Poset& P) {
  std::vector<std::vector<int>> out{{}};
  std::vector<int> cur;
  std::vector<char> used(P.faces.size(), 0);
  std::function<void(int)> rec = [&](int from) {
    for (int a = from; a < static_cast<int>(P.arcs.size()); ++a) {
      auto [u, l] = P.arcs[a];
      if (used[u] || used[l]) continue;
      used[u] = used[l] = 1;
      cur.push_back(a);
      out.push_back(cur);
      rec(a + 1);
      cur.pop_back();
      used[u] = used[l] = 0;
    }
  };
  rec(0);
  return out;
}

/// Directed simple cycles of the whole reoriented poset, by DFS from each
/// start node through larger nodes only.
inline int cycle_count(const Poset& P, const std::vector<int>& m) {
  const int n = static_cast<int>(P.faces.size());
  std::vector<char> matched(P.arcs.size(), 0);
  for (int a : m) matched[a] = 1;
  std::vector<std::vector<int>> g(n);
  for (int a = 0; a < static_cast<int>(P.arcs.size()); ++a) {
    auto [u, l] = P.arcs[a];
    if (matched[a])
      g[l].push_back(u);
    else
      g[u].push_back(l);
  }
  int count = 0;
  std::vector<char> on_path(n, 0);
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (int w : g[v]) {
      if (w == start) {
        ++count;
      } else if (w > start && !on_path[w]) {
        on_path[w] = 1;
        dfs(start, w);
        on_path[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = 1;
    dfs(s, s);
    on_path[s] = 0;
  }
  return count;
}

/// Rank over F2 of a dense matrix given as bit rows.
inline std::size_t rank_f2(std::vector<std::vector<std::uint64_t>> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t words = rows[0].size();
  for (std::size_t w = 0; w < words; ++w)
    for (int b = 0; b < 64; ++b) {
      const std::uint64_t bit = std::uint64_t{1} << b;
      std::size_t p = rank;
      while (p < rows.size() && !(rows[p][w] & bit)) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[rank], rows[p]);
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (r != rank && (rows[r][w] & bit))
          for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
      ++rank;
    }
  return rank;
}

/// Rank over Z/p for a prime p, dense.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p = 1000000007) {
  std::size_t rank = 0;
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  auto inv = [&](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a)
    for (auto& v : row) v = ((v % p) + p) % p;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    const std::int64_t iv = inv(a[rank][c]);
    for (auto& v : a[rank]) v = v * iv % p;
    for (std::size_t r = 0; r < a.size(); ++r)
      if (r != rank && a[r][c]) {
        const std::int64_t f = a[r][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
      }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers (degree -> rank, zeros omitted) of the complex whose
/// simplices are the given sorted vertex lists, closed under faces. Mod 2 by
/// default, or over Z/p.
inline std::map<int, std::size_t> reduced_betti(const std::vector<std::vector<int>>& simplices, bool mod2 = true) {
  std::map<int, std::vector<std::vector<int>>> by_dim;
  by_dim[-1].push_back({});
  for (const auto& s : simplices) by_dim[static_cast<int>(s.size()) - 1].push_back(s);
  std::map<int, std::map<std::vector<int>, std::size_t>> index;
  for (auto& [d, list] : by_dim) {
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) index[d][list[i]] = i;
  }
  const int top = by_dim.rbegin()->first;
  std::map<int, std::size_t> rank;  // rank of boundary out of degree d
  for (int d = 0; d <= top; ++d) {
    const auto& cols = by_dim[d];
    const auto& rows_index = index[d - 1];
    const std::size_t nrows = by_dim[d - 1].size();
    if (mod2) {
      // Bit rows indexed by d-simplices (transpose has the same rank).
      std::vector<std::vector<std::uint64_t>> m(cols.size(), std::vector<std::uint64_t>((nrows + 63) / 64, 0));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t drop = 0; drop < cols[c].size(); ++drop) {
          auto face = cols[c];
          face.erase(face.begin() + static_cast<long>(drop));
          const auto r = rows_index.at(face);
          m[c][r / 64] ^= std::uint64_t{1} << (r % 64);
        }
      rank[d] = rank_f2(std::move(m));
    } else {
      std::vector<std::vector<std::int64_t>> m(cols.size(), std::vector<std::int64_t>(nrows, 0));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t drop = 0; drop < cols[c].size(); ++drop) {
          auto face = cols[c];
          face.erase(face.begin() + static_cast<long>(drop));
          m[c][rows_index.at(face)] += drop % 2 == 0 ? 1 : -1;
        }
      rank[d] = rank_mod_p(std::move(m));
    }
  }
  std::map<int, std::size_t> betti;
  for (int d = -1; d <= top; ++d) {
    const std::size_t b = by_dim[d].size() - (d >= 0 ? rank[d] : 0) - (rank.count(d + 1) ? rank[d + 1] : 0);
    if (b) betti[d] = b;
  }
  return betti;
}

/// Reduced Betti numbers of M_k: matchings with at most k induced cycles.
inline std::map<int, std::size_t> filtration_betti(const mfc::SimplicialComplex& X, int k, bool mod2 = true) {
  auto P = poset_of(X);
  std::vector<std::vector<int>> simplices;
  for (auto& m : matchings(P))
    if (!m.empty() && cycle_count(P, m) <= k) simplices.push_back(m);
  return reduced_betti(simplices, mod2);
}

/// Characteristic polynomial det(x Id - A) by Faddeev-LeVerrier, lowest first.
inline std::vector<Big> charpoly(const std::vector<std::vector<long long>>& A) {
  const std::size_t n = A.size();
  using Mat = std::vector<std::vector<Big>>;
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(n, std::vector<Big>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (x[i][k] != 0)
          for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  Mat a(n, std::vector<Big>(n)), M(n, std::vector<Big>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = A[i][j];
  std::vector<Big> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) M[i][i] += c[n - k + 1];
    M = mul(a, M);
    Big trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += M[i][i];
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return c;
}

/// Random simple graph on `vertices` vertices with exactly `edges` edges.
inline std::vector<std::vector<long long>> random_graph(std::mt19937& rng, int vertices, int edges, bool connected) {
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) all.emplace_back(i, j);
  while (true) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::vector<long long>> facets;
    std::vector<int> parent(vertices);
    for (int i = 0; i < vertices; ++i) parent[i] = i;
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    std::vector<char> touched(vertices, 0);
    int components = vertices;
    for (int e = 0; e < edges; ++e) {
      auto [a, b] = all[e];
      facets.push_back({a, b});
      touched[a] = touched[b] = 1;
      if (root(a) != root(b)) {
        parent[root(a)] = root(b);
        --components;
      }
    }
    for (int v = 0; v < vertices; ++v)
      if (!touched[v]) facets.push_back({v});
    if (!connected || components == 1) return facets;
  }
}

}  // namespace oracle
