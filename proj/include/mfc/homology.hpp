#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mfc/errors.hpp"
#include "mfc/f2_rank.hpp"
#include "mfc/simplicial_complex.hpp"
#include "mfc/smith.hpp"
#include "mfc/sparse_matrix.hpp"

namespace mfc {

enum class Coefficients { f2, integers };

/// Ranks indexed by (homological degree, filtration degree); singly graded
/// tables use filtration 0. Only nonzero ranks are stored.
struct HomologyTable {
  Coefficients coefficients = Coefficients::f2;
  bool reduced = false;
  std::map<std::pair<int, int>, std::size_t> ranks;
  /// Integer tables only: nontrivial invariant factors per degree.
  std::map<int, std::vector<BigInt>> torsion;

  [[nodiscard]] std::size_t rank(int degree, int filtration = 0) const {
    auto it = ranks.find({degree, filtration});
    return it == ranks.end() ? 0 : it->second;
  }
  void add(int degree, int filtration, std::size_t r) {
    if (r != 0) ranks[{degree, filtration}] += r;
  }
  [[nodiscard]] std::size_t total_rank() const {
    std::size_t n = 0;
    for (const auto& [k, r] : ranks) n += r;
    return n;
  }
  [[nodiscard]] bool torsion_free() const {
    for (const auto& [d, f] : torsion)
      if (!f.empty()) return false;
    return true;
  }
  /// Rank table with the filtration index summed out.
  [[nodiscard]] std::map<int, std::size_t> by_degree() const {
    std::map<int, std::size_t> out;
    for (const auto& [k, r] : ranks) out[k.first] += r;
    return out;
  }
  friend bool operator==(const HomologyTable& a, const HomologyTable& b) {
    return a.coefficients == b.coefficients && a.reduced == b.reduced && a.ranks == b.ranks &&
           a.torsion == b.torsion;
  }
};

/// A bounded chain complex. boundaries[t] maps C_{lowest+t} to C_{lowest+t-1};
/// boundaries[0] has no rows.
struct ChainComplex {
  int lowest_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> boundaries;
};

namespace detail {

inline void check_complex_shape(const ChainComplex& cc) {
  if (cc.boundaries.size() != cc.dims.size()) throw InternalError("chain complex: one boundary per degree expected");
  for (std::size_t t = 0; t < cc.dims.size(); ++t) {
    const auto& b = cc.boundaries[t];
    const std::size_t below = t == 0 ? 0 : cc.dims[t - 1];
    if (b.cols != cc.dims[t] || b.rows != below) throw InternalError("chain complex: boundary has the wrong shape");
  }
}

inline void check_composition(const ChainComplex& cc, bool mod2) {
  for (std::size_t t = 2; t < cc.boundaries.size(); ++t)
    if (!product_is_zero(cc.boundaries[t - 1], cc.boundaries[t], mod2))
      throw InternalError("boundary maps do not compose to zero");
}

}  // namespace detail

inline HomologyTable homology_mod2(const ChainComplex& cc) {
  detail::check_complex_shape(cc);
  detail::check_composition(cc, true);
  const std::size_t n = cc.dims.size();
  std::vector<std::size_t> r(n + 1, 0);
  for (std::size_t t = 1; t < n; ++t) r[t] = rank_mod2(cc.boundaries[t]);
  HomologyTable out;
  out.coefficients = Coefficients::f2;
  out.reduced = cc.lowest_degree < 0;
  for (std::size_t t = 0; t < n; ++t)
    out.add(cc.lowest_degree + static_cast<int>(t), 0, cc.dims[t] - r[t] - r[t + 1]);
  return out;
}

inline HomologyTable homology_integer(const ChainComplex& cc) {
  detail::check_complex_shape(cc);
  detail::check_composition(cc, false);
  const std::size_t n = cc.dims.size();
  std::vector<SmithResult> s(n + 1);
  for (std::size_t t = 1; t < n; ++t) s[t] = smith(cc.boundaries[t]);
  HomologyTable out;
  out.coefficients = Coefficients::integers;
  out.reduced = cc.lowest_degree < 0;
  for (std::size_t t = 0; t < n; ++t) {
    const int degree = cc.lowest_degree + static_cast<int>(t);
    out.add(degree, 0, cc.dims[t] - s[t].rank - s[t + 1].rank);
    if (!s[t + 1].torsion.empty()) out.torsion[degree] = s[t + 1].torsion;
  }
  return out;
}

/// Simplicial chains with face signs (-1)^position in the sorted vertex array.
/// The reduced variant augments with one generator in degree -1, so the empty
/// complex has reduced homology of rank 1 there.
inline ChainComplex simplicial_chain_complex(const SimplicialComplex& X, bool reduced) {
  ChainComplex cc;
  cc.lowest_degree = reduced ? -1 : 0;
  if (reduced) {
    cc.dims.push_back(1);
    cc.boundaries.emplace_back(0, 1);
  }
  Simplex face;
  for (int d = 0; d <= X.dimension(); ++d) {
    auto [first, last] = X.range_of_dim(d);
    SparseMatrix b(cc.dims.empty() ? 0 : cc.dims.back(), last - first);
    for (auto id = first; id < last; ++id) {
      const auto& s = X.simplex(id);
      if (d == 0) {
        if (reduced) b.add(0, id - first, 1);
        continue;
      }
      auto [lo, hi] = X.range_of_dim(d - 1);
      (void)hi;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != drop) face.push_back(s[t]);
        b.add(static_cast<std::uint32_t>(*X.find(face) - lo), id - first, drop % 2 == 0 ? 1 : -1);
      }
    }
    b.normalize();
    cc.dims.push_back(last - first);
    cc.boundaries.push_back(std::move(b));
  }
  return cc;
}

inline HomologyTable simplicial_homology_mod2(const SimplicialComplex& X, bool reduced) {
  return homology_mod2(simplicial_chain_complex(X, reduced));
}

inline HomologyTable simplicial_homology_integer(const SimplicialComplex& X, bool reduced) {
  return homology_integer(simplicial_chain_complex(X, reduced));
}

}  // namespace mfc
