#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfc/errors.hpp"
#include "mfc/f2_rank.hpp"
#include "mfc/face_poset.hpp"
#include "mfc/homology.hpp"
#include "mfc/matching.hpp"
#include "mfc/options.hpp"
#include "mfc/sparse_matrix.hpp"
#include "mfc/subcomplexes.hpp"

namespace mfc {

/// Which part of the simplicial boundary to use. `full` is the whole map,
/// `horizontal` keeps faces with the same number of induced cycles, and
/// `diagonal` keeps faces with strictly fewer.
enum class Differential { full, horizontal, diagonal };

/// Chains on M(X) graded by dimension i and by the number j of oriented
/// cycles a simplex's matching induces. Cells are all matchings of the face
/// poset, the empty one included as the augmentation generator at (-1, 0);
/// within each bidegree the basis follows the canonical matching order.
class BigradedChainComplex {
 public:
  static BigradedChainComplex build(const SimplicialComplex& X, const Limits& limits = {}) {
    BigradedChainComplex cc;
    cc.poset_ = FacePoset(X);
    check_arc_guard(cc.poset_.arc_count(), limits);
    cc.levels_ = MatchingLevels(PosetSubgraph::full(cc.poset_));
    const std::size_t L = cc.levels_.level_count();
    cc.j_.resize(L);
    cc.faces_.resize(L);
    for (std::size_t s = 0; s < L; ++s) {
      const std::size_t n = cc.levels_.count(s);
      cc.j_[s].assign(n, 0);
      cc.faces_[s].assign(n * s, 0);
      parallel_chunks(n, limits.threads, [&](std::size_t first, std::size_t last) {
        CycleFinder finder(cc.poset_);
        std::vector<ArcId> face;
        for (auto i = first; i < last; ++i) {
          auto m = cc.levels_.get(s, i);
          cc.j_[s][i] = static_cast<std::uint32_t>(s >= 2 ? finder.count(m) : 0);
          for (std::size_t drop = 0; drop < s; ++drop) {
            face.clear();
            for (std::size_t t = 0; t < s; ++t)
              if (t != drop) face.push_back(m[t]);
            auto idx = cc.levels_.find(face);
            if (!idx) throw InternalError("face of a matching missing from enumeration");
            cc.faces_[s][i * s + drop] = static_cast<std::uint32_t>(*idx);
          }
        }
      });
    }
    cc.index_bases();
    return cc;
  }

  [[nodiscard]] const FacePoset& poset() const { return poset_; }
  [[nodiscard]] const MatchingLevels& cells() const { return levels_; }

  /// Largest filtration degree present.
  [[nodiscard]] int max_filtration() const { return max_j_; }
  /// Largest homological degree present (-1 when only the empty matching exists).
  [[nodiscard]] int max_degree() const { return static_cast<int>(levels_.level_count()) - 2; }

  /// Filtration degree of the cell of size `size` at position `index`.
  [[nodiscard]] int filtration(std::size_t size, std::size_t index) const { return static_cast<int>(j_[size][index]); }

  /// Dimension of the bidegree (i, j); i = -1 is the augmentation.
  [[nodiscard]] std::size_t dim(int i, int j) const {
    auto it = basis_.find({i, j});
    return it == basis_.end() ? 0 : it->second.size();
  }
  /// Cell positions (within size level i+1) forming the basis of (i, j).
  [[nodiscard]] const std::vector<std::uint32_t>& basis(int i, int j) const {
    static const std::vector<std::uint32_t> none;
    auto it = basis_.find({i, j});
    return it == basis_.end() ? none : it->second;
  }
  [[nodiscard]] std::vector<std::pair<int, int>> bidegrees() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [k, v] : basis_) out.push_back(k);
    return out;
  }

  /// Faces of a cell as (face index in level size-1, sign) filtered by part.
  template <class Visit>
  void for_each_face(Differential part, std::size_t size, std::size_t index, Visit&& visit) const {
    const int j = filtration(size, index);
    for (std::size_t drop = 0; drop < size; ++drop) {
      const auto f = faces_[size][index * size + drop];
      const int jf = filtration(size - 1, f);
      if (jf > j) throw InternalError("face induces more cycles than its simplex");
      if (part == Differential::horizontal && jf != j) continue;
      if (part == Differential::diagonal && jf == j) continue;
      visit(static_cast<std::size_t>(f), drop % 2 == 0 ? 1 : -1);
    }
  }

  /// Block of a differential from bidegree (i, j_from) to (i-1, j_to).
  [[nodiscard]] SparseMatrix block(Differential part, int i, int j_from, int j_to) const {
    const auto& src = basis(i, j_from);
    const auto& dst = basis(i - 1, j_to);
    SparseMatrix m(dst.size(), src.size());
    if (i < 0) return m;
    const auto size = static_cast<std::size_t>(i + 1);
    for (std::size_t c = 0; c < src.size(); ++c)
      for_each_face(part, size, src[c], [&](std::size_t f, int sign) {
        if (filtration(size - 1, f) != j_to) return;
        m.add(position_[size - 1][f], c, sign);
      });
    m.normalize();
    return m;
  }

  /// Chains of M_k(X) (all cells with filtration <= k) with the full
  /// differential, ordered by degree and then canonically.
  [[nodiscard]] ChainComplex filtered_subcomplex(int k, bool reduced) const {
    ChainComplex out;
    out.lowest_degree = reduced ? -1 : 0;
    if (k < 0) {
      // M_k is empty; only the augmentation survives in the reduced variant.
      if (reduced) {
        out.dims.push_back(1);
        out.boundaries.emplace_back(0, 1);
      }
      return out;
    }
    std::vector<std::vector<std::uint32_t>> local(levels_.level_count());
    std::vector<std::size_t> count(levels_.level_count(), 0);
    for (std::size_t s = 0; s < levels_.level_count(); ++s) {
      local[s].assign(levels_.count(s), ~std::uint32_t{0});
      for (std::size_t i = 0; i < levels_.count(s); ++i)
        if (filtration(s, i) <= k) local[s][i] = static_cast<std::uint32_t>(count[s]++);
    }
    const std::size_t first_size = reduced ? 0 : 1;
    for (std::size_t s = first_size; s < levels_.level_count(); ++s) {
      const std::size_t rows = s == first_size ? 0 : count[s - 1];
      SparseMatrix b(rows, count[s]);
      if (s > first_size)
        for (std::size_t i = 0; i < levels_.count(s); ++i) {
          if (local[s][i] == ~std::uint32_t{0}) continue;
          for_each_face(Differential::full, s, i, [&](std::size_t f, int sign) { b.add(local[s - 1][f], local[s][i], sign); });
        }
      b.normalize();
      out.dims.push_back(count[s]);
      out.boundaries.push_back(std::move(b));
    }
    return out;
  }

 private:
  void index_bases() {
    position_.resize(levels_.level_count());
    for (std::size_t s = 0; s < levels_.level_count(); ++s) {
      position_[s].assign(levels_.count(s), 0);
      for (std::size_t i = 0; i < levels_.count(s); ++i) {
        const int j = filtration(s, i);
        max_j_ = std::max(max_j_, j);
        auto& b = basis_[{static_cast<int>(s) - 1, j}];
        position_[s][i] = static_cast<std::uint32_t>(b.size());
        b.push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  FacePoset poset_;
  MatchingLevels levels_;
  std::vector<std::vector<std::uint32_t>> j_;
  std::vector<std::vector<std::uint32_t>> faces_;
  std::vector<std::vector<std::uint32_t>> position_;
  std::map<std::pair<int, int>, std::vector<std::uint32_t>> basis_;
  int max_j_ = 0;
};

/// Outcome of squaring each differential over F2. A witness is a cell whose
/// square is nonzero, with one face (two removals down) of odd coefficient.
struct DifferentialReport {
  struct Witness {
    Matching cell;
    Matching face;
  };
  bool full_squared_zero = true;
  bool full_squared_zero_integer = true;
  bool horizontal_squared_zero = true;
  bool diagonal_squared_zero = true;
  std::optional<Witness> full_witness;
  std::optional<Witness> horizontal_witness;
  std::optional<Witness> diagonal_witness;
};

namespace detail {

// Coefficients of d^2 applied to one cell, keyed by face index two levels down.
inline std::optional<std::size_t> square_defect(const BigradedChainComplex& cc, Differential part, std::size_t size,
                                                std::size_t index, bool integer) {
  if (size < 2) return std::nullopt;
  std::map<std::size_t, long long> acc;
  cc.for_each_face(part, size, index, [&](std::size_t f, int s1) {
    cc.for_each_face(part, size - 1, f, [&](std::size_t g, int s2) { acc[g] += s1 * s2; });
  });
  for (const auto& [g, v] : acc)
    if (integer ? v != 0 : v % 2 != 0) return g;
  return std::nullopt;
}

inline Matching cell_matching(const BigradedChainComplex& cc, std::size_t size, std::size_t index) {
  auto m = cc.cells().get(size, index);
  return Matching{{m.begin(), m.end()}};
}

}  // namespace detail

inline DifferentialReport verify_differentials(const BigradedChainComplex& cc) {
  DifferentialReport report;
  const auto& cells = cc.cells();
  auto check = [&](Differential part, bool integer, bool& ok, std::optional<DifferentialReport::Witness>* witness) {
    for (std::size_t s = 2; s < cells.level_count() && ok; ++s)
      for (std::size_t i = 0; i < cells.count(s); ++i)
        if (auto g = detail::square_defect(cc, part, s, i, integer)) {
          ok = false;
          if (witness) *witness = DifferentialReport::Witness{detail::cell_matching(cc, s, i), detail::cell_matching(cc, s - 2, *g)};
          break;
        }
  };
  check(Differential::full, false, report.full_squared_zero, &report.full_witness);
  check(Differential::full, true, report.full_squared_zero_integer, nullptr);
  check(Differential::horizontal, false, report.horizontal_squared_zero, &report.horizontal_witness);
  check(Differential::diagonal, false, report.diagonal_squared_zero, &report.diagonal_witness);
  return report;
}

/// Mod-2 homology of M_k(X) computed from the blocks of filtration <= k.
inline HomologyTable filtered_homology_mod2(const BigradedChainComplex& cc, int k, bool reduced = true) {
  return homology_mod2(cc.filtered_subcomplex(k, reduced));
}

/// Reduced integer homology of M_k(X), via the explicit subcomplex.
inline HomologyTable filtered_homology(const SimplicialComplex& X, int k, const Limits& limits = {}) {
  return simplicial_homology_integer(filtration_complex(X, k, limits), true);
}

/// Mod-2 homology of (C, d_J), one column complex per filtration degree.
/// The reduced variant includes the empty matching at (-1, 0).
inline HomologyTable horizontal_homology(const BigradedChainComplex& cc, bool reduced = false) {
  HomologyTable out;
  out.reduced = reduced;
  const int lowest = reduced ? -1 : 0;
  for (int j = 0; j <= cc.max_filtration(); ++j) {
    std::map<int, std::size_t> rank_out;
    for (int i = lowest + 1; i <= cc.max_degree(); ++i) rank_out[i] = rank_mod2(cc.block(Differential::horizontal, i, j, j));
    for (int i = lowest; i <= cc.max_degree(); ++i) {
      const std::size_t d = cc.dim(i, j);
      if (d == 0) continue;
      const std::size_t r_out = i > lowest ? rank_out[i] : 0;
      const std::size_t r_in = rank_out.count(i + 1) ? rank_out[i + 1] : 0;
      out.add(i, j, d - r_out - r_in);
    }
  }
  return out;
}

inline HomologyTable horizontal_homology(const SimplicialComplex& X, bool reduced = false, const Limits& limits = {}) {
  return horizontal_homology(BigradedChainComplex::build(X, limits), reduced);
}

/// Mod-2 homology of (C, d_d) for a graph, where d_d has bidegree (-1, -1).
/// The empty matching is not part of this complex.
inline HomologyTable diagonal_homology(const BigradedChainComplex& cc) {
  if (!cc.poset().complex().is_graph())
    throw PreconditionError("diagonal homology is only defined for complexes of dimension at most 1");
  HomologyTable out;
  auto rank_from = [&](int i, int j) -> std::size_t {
    if (i <= 0 || j <= 0) return 0;
    return rank_mod2(cc.block(Differential::diagonal, i, j, j - 1));
  };
  for (int i = 0; i <= cc.max_degree(); ++i)
    for (int j = 0; j <= cc.max_filtration(); ++j) {
      const std::size_t d = cc.dim(i, j);
      if (d == 0) continue;
      out.add(i, j, d - rank_from(i, j) - rank_from(i + 1, j + 1));
    }
  return out;
}

inline HomologyTable diagonal_homology(const SimplicialComplex& G, const Limits& limits = {}) {
  if (!G.is_graph()) throw PreconditionError("diagonal homology is only defined for complexes of dimension at most 1");
  return diagonal_homology(BigradedChainComplex::build(G, limits));
}

/// A cell whose diagonal differential squares to a nonzero chain, found
/// without building the whole complex.
struct DiagonalSquareWitness {
  Matching cell;
  Matching face;
  std::size_t cell_j = 0;
  std::size_t face_j = 0;
  /// Some two induced cycles of `cell` share an arc.
  bool overlapping_cycles = false;
};

/// Searches matchings of at most `max_size` arcs, all between dimensions d and
/// d + 1 for a single d, for a cell m and arcs a, b in m such that an odd
/// number of the two orders of removing a and b drop J strictly twice.
inline std::optional<DiagonalSquareWitness> find_diagonal_square_witness(const SimplicialComplex& X,
                                                                         std::size_t max_size = 5) {
  FacePoset F(X);
  CycleFinder finder(F);
  std::optional<DiagonalSquareWitness> found;
  std::vector<ArcId> current, scratch;
  auto j_without = [&](std::initializer_list<ArcId> drop) {
    scratch.clear();
    for (auto a : current)
      if (std::find(drop.begin(), drop.end(), a) == drop.end()) scratch.push_back(a);
    return finder.count(scratch);
  };
  auto test = [&]() {
    const auto j = finder.count(current);
    if (j < 2) return false;
    for (std::size_t p = 0; p < current.size(); ++p)
      for (std::size_t q = p + 1; q < current.size(); ++q) {
        const ArcId a = current[p], b = current[q];
        const auto ja = j_without({a}), jb = j_without({b}), jab = j_without({a, b});
        const int paths = (ja < j && jab < ja ? 1 : 0) + (jb < j && jab < jb ? 1 : 0);
        if (paths % 2 == 0) continue;
        std::vector<ArcId> face;
        for (auto c : current)
          if (c != a && c != b) face.push_back(c);
        auto C = OrientedCycleCollection(F, finder.cycles(current));
        found = DiagonalSquareWitness{Matching{current}, Matching{std::move(face)}, j, jab,
                                      C.independent_count() < C.count()};
        return true;
      }
    return false;
  };
  for (int d = 0; d < X.dimension() && !found; ++d) {
    std::vector<ArcId> arcs;
    for (ArcId a = 0; a < F.arc_count(); ++a)
      if (F.dim(F.arc(a).lower) == d) arcs.push_back(a);
    std::vector<char> used(F.node_count(), 0);
    auto dfs = [&](auto&& self, std::size_t from) -> bool {
      if (current.size() >= 2 && test()) return true;
      if (current.size() == max_size) return false;
      for (std::size_t p = from; p < arcs.size(); ++p) {
        const auto& arc = F.arc(arcs[p]);
        if (used[arc.upper] || used[arc.lower]) continue;
        used[arc.upper] = used[arc.lower] = 1;
        current.push_back(arcs[p]);
        const bool hit = self(self, p + 1);
        current.pop_back();
        used[arc.upper] = used[arc.lower] = 0;
        if (hit) return true;
      }
      return false;
    };
    dfs(dfs, 0);
  }
  return found;
}

}  // namespace mfc
