#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mfc/bigraded.hpp"
#include "mfc/errors.hpp"
#include "mfc/face_poset.hpp"
#include "mfc/graph_cycles.hpp"
#include "mfc/homology.hpp"
#include "mfc/matching.hpp"
#include "mfc/smith.hpp"
#include "mfc/subcomplexes.hpp"

namespace mfc {

/// How the complex attached to the complement X_C of a non-maximal collection
/// is cut out: `standalone` keeps matchings of X_C acyclic within X_C alone,
/// `ambient` keeps those whose union with C's loop arcs induces exactly C.
enum class ComplementRule { standalone, ambient };

inline const char* to_string(ComplementRule r) { return r == ComplementRule::standalone ? "standalone" : "ambient"; }

namespace detail {

// Adds H~ of K shifted up by `shift` into filtration degree j, `copies` times.
inline void add_shifted_reduced(HomologyTable& out, const SimplicialComplex& K, int shift, int j, std::size_t copies) {
  auto h = simplicial_homology_mod2(K, true);
  for (const auto& [key, r] : h.ranks) out.add(key.first + shift, j, r * copies);
}

}  // namespace detail

/// Horizontal homology assembled from its summands: H(discrete Morse complex)
/// in filtration 0; for each oriented non-maximal supported collection C one
/// copy of the reduced homology of the complement complex, shifted by the
/// number of matched loop arcs and placed in filtration |C|; for each oriented
/// maximal collection one generator in degree (matched loop arcs - 1).
inline HomologyTable hh_decomposition(const SimplicialComplex& X, ComplementRule rule = ComplementRule::standalone,
                                      const Limits& limits = {}) {
  FacePoset F(X);
  HomologyTable out;
  for (const auto& [key, r] : simplicial_homology_mod2(morse_complex(X, limits), false).ranks) out.add(key.first, 0, r);
  for (const auto& sc : supported_collections(X, limits)) {
    const auto& C = sc.cycles;
    const int j = static_cast<int>(C.count());
    const int shift = static_cast<int>(C.matched_arc_total());
    switch (C.kind()) {
      case CollectionKind::empty:
        break;
      case CollectionKind::maximal:
        out.add(shift - 1, j, 1);
        break;
      case CollectionKind::non_maximal: {
        auto K = rule == ComplementRule::standalone ? restricted_morse_complex(complement(F, C))
                                                    : ambient_morse_complex(F, C, sc.witness);
        detail::add_shifted_reduced(out, K, shift, j, 1);
        break;
      }
    }
  }
  return out;
}

/// The graph form of the decomposition, driven by unoriented vertex-disjoint
/// cycle sets instead of matchings: 2^|C| shifted copies of the reduced
/// homology of the complement of each non-spanning set, and 2^|C| generators
/// in degree (total length - 1) for each 2-factor.
inline HomologyTable hh_decomposition_graph(const SimplicialComplex& G, const Limits& limits = {}) {
  detail::require_graph(G, "hh_decomposition_graph");
  FacePoset F(G);
  HomologyTable out;
  for (const auto& [key, r] : simplicial_homology_mod2(morse_complex(G, limits), false).ranks) out.add(key.first, 0, r);
  for (const auto& C : vd_cycle_collections(G)) {
    if (C.empty()) continue;
    const int j = static_cast<int>(C.size());
    const int len = static_cast<int>(total_length(C));
    const std::size_t copies = std::size_t{1} << C.size();
    if (covers_all_vertices(G, C)) {
      out.add(len - 1, j, copies);
    } else {
      auto H = complement_of_nodes(F, subdivision_nodes(G, C));
      detail::add_shifted_reduced(out, restricted_morse_complex(H), len, j, copies);
    }
  }
  return out;
}

/// First bidegree where two bigraded tables differ, if any.
inline std::optional<std::pair<int, int>> first_difference(const HomologyTable& a, const HomologyTable& b) {
  std::map<std::pair<int, int>, bool> keys;
  for (const auto& [k, r] : a.ranks) keys[k] = true;
  for (const auto& [k, r] : b.ranks) keys[k] = true;
  for (const auto& [k, unused] : keys)
    if (a.rank(k.first, k.second) != b.rank(k.first, k.second)) return k;
  return std::nullopt;
}

struct DecompositionReport {
  HomologyTable direct;
  HomologyTable standalone;
  HomologyTable ambient;
  std::optional<HomologyTable> graph_form;
  bool standalone_matches = false;
  bool ambient_matches = false;
  std::optional<bool> graph_form_matches;
  ComplementRule rule = ComplementRule::standalone;
  /// The rule in force matches, and so does the graph form where it applies.
  bool pass = false;
  std::optional<std::pair<int, int>> first_mismatch;
};

/// Compares the assembled decomposition with horizontal homology computed
/// directly from (C, d_J), in every bidegree. Both complement rules are
/// evaluated and reported; `rule` decides the verdict.
inline DecompositionReport verify_decomposition(const SimplicialComplex& X, ComplementRule rule = ComplementRule::standalone,
                                                const Limits& limits = {}) {
  DecompositionReport r;
  r.rule = rule;
  r.direct = horizontal_homology(X, false, limits);
  r.standalone = hh_decomposition(X, ComplementRule::standalone, limits);
  r.ambient = hh_decomposition(X, ComplementRule::ambient, limits);
  auto diff_standalone = first_difference(r.direct, r.standalone);
  auto diff_ambient = first_difference(r.direct, r.ambient);
  r.standalone_matches = !diff_standalone;
  r.ambient_matches = !diff_ambient;
  r.pass = rule == ComplementRule::standalone ? r.standalone_matches : r.ambient_matches;
  r.first_mismatch = rule == ComplementRule::standalone ? diff_standalone : diff_ambient;
  if (X.is_graph()) {
    r.graph_form = hh_decomposition_graph(X, limits);
    auto diff = first_difference(r.direct, *r.graph_form);
    r.graph_form_matches = !diff;
    if (diff) {
      r.pass = false;
      if (!r.first_mismatch) r.first_mismatch = diff;
    }
  }
  return r;
}

/// Polynomial in t with integer coefficients.
struct EulerPolynomial {
  std::map<int, long long> coefficients;

  [[nodiscard]] long long coefficient(int j) const {
    auto it = coefficients.find(j);
    return it == coefficients.end() ? 0 : it->second;
  }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const {
    int d = -1;
    for (const auto& [j, c] : coefficients)
      if (c != 0) d = std::max(d, j);
    return d;
  }
  /// Coefficients lowest degree first, trailing zeros dropped.
  [[nodiscard]] std::vector<long long> to_vector() const {
    std::vector<long long> out(static_cast<std::size_t>(std::max(0, degree() + 1)), 0);
    for (const auto& [j, c] : coefficients)
      if (j >= 0 && j < static_cast<int>(out.size())) out[static_cast<std::size_t>(j)] = c;
    return out;
  }
  friend bool operator==(const EulerPolynomial& a, const EulerPolynomial& b) { return a.to_vector() == b.to_vector(); }
};

inline EulerPolynomial euler_polynomial(const HomologyTable& bigraded) {
  EulerPolynomial p;
  for (const auto& [key, r] : bigraded.ranks) p.coefficients[key.second] += (key.first % 2 == 0 ? 1 : -1) * static_cast<long long>(r);
  return p;
}

/// Graded Euler characteristic of horizontal homology. Reduced by default, so
/// the empty matching contributes -1 to the constant term.
inline EulerPolynomial chi_t(const SimplicialComplex& X, bool reduced = true, const Limits& limits = {}) {
  return euler_polynomial(horizontal_homology(X, reduced, limits));
}

/// Exact integer square matrix.
using IntMatrix = std::vector<std::vector<long long>>;

/// Fraction-free (Bareiss) determinant.
inline BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

struct LaplacianData {
  IntMatrix laplacian;
  /// det(x Id - L), lowest degree first (monic).
  std::vector<long long> charpoly;
  /// det(L - x Id) = (-1)^|V| det(x Id - L), lowest degree first.
  std::vector<long long> charpoly_signed;
  /// rho[k]: rooted spanning forests with k edges.
  std::vector<long long> rho;
  long long det_id_plus_l = 0;
  long long det_id_minus_l = 0;
};

inline IntMatrix laplacian_matrix(const SimplicialComplex& G) {
  detail::require_graph(G, "laplacian");
  const std::size_t n = G.vertex_count();
  IntMatrix L(n, std::vector<long long>(n, 0));
  auto [e0, e1] = G.range_of_dim(1);
  for (auto e = e0; e < e1; ++e) {
    const auto& s = G.simplex(e);
    ++L[s[0]][s[0]];
    ++L[s[1]][s[1]];
    --L[s[0]][s[1]];
    --L[s[1]][s[0]];
  }
  return L;
}

/// Brute force over edge subsets: every forest contributes the product of its
/// component sizes (one root per tree).
inline std::vector<long long> rooted_forest_counts(const SimplicialComplex& G) {
  detail::require_graph(G, "rooted_forest_counts");
  const std::size_t n = G.vertex_count();
  auto [e0, e1] = G.range_of_dim(1);
  const std::size_t m = e1 - e0;
  if (m > 30) throw ResourceError("rooted forest enumeration limited to 30 edges");
  std::vector<long long> rho(n == 0 ? 1 : n, 0);
  std::vector<std::size_t> parent(n), size(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    std::fill(size.begin(), size.end(), 1);
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool forest = true;
    std::size_t k = 0;
    for (std::size_t b = 0; b < m && forest; ++b) {
      if (!(mask >> b & 1)) continue;
      const auto& s = G.simplex(e0 + b);
      auto a = root(s[0]), c = root(s[1]);
      if (a == c) {
        forest = false;
      } else {
        parent[a] = c;
        size[c] += size[a];
        ++k;
      }
    }
    if (!forest) continue;
    long long ways = 1;
    for (std::size_t v = 0; v < n; ++v)
      if (root(v) == v) ways *= static_cast<long long>(size[v]);
    rho[k] += ways;
  }
  return rho;
}

/// Characteristic polynomial det(x Id - A), lowest degree first. Evaluates the
/// determinant at x = 0..n and interpolates in the falling-factorial basis,
/// where every coefficient is an exact integer.
inline std::vector<long long> characteristic_polynomial(const IntMatrix& A) {
  const std::size_t n = A.size();
  std::vector<BigInt> diff(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix M = A;
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& v : M[i]) v = -v;
      M[i][i] += static_cast<long long>(x);
    }
    diff[x] = determinant(M);
  }
  // Newton forward differences: f(x) = sum_k (Delta^k f(0) / k!) x(x-1)...(x-k+1).
  std::vector<BigInt> newton(n + 1);
  BigInt factorial = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    newton[k] = diff[0] / factorial;
    for (std::size_t x = 0; x + k < n; ++x) diff[x] = diff[x + 1] - diff[x];
  }
  std::vector<BigInt> coeff(n + 1, 0), falling{1};
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t d = 0; d < falling.size(); ++d) coeff[d] += newton[k] * falling[d];
    // falling *= (x - k)
    std::vector<BigInt> next(falling.size() + 1, 0);
    for (std::size_t d = 0; d < falling.size(); ++d) {
      next[d + 1] += falling[d];
      next[d] -= falling[d] * static_cast<long long>(k);
    }
    falling = std::move(next);
  }
  std::vector<long long> out;
  for (const auto& c : coeff) out.push_back(static_cast<long long>(c));
  return out;
}

/// Laplacian, its characteristic polynomial and the rooted-forest census,
/// checking (-1)^k c_k = rho_k where c_k multiplies x^(|V|-k) in det(x Id - L).
inline LaplacianData laplacian(const SimplicialComplex& G) {
  LaplacianData d;
  d.laplacian = laplacian_matrix(G);
  const std::size_t n = d.laplacian.size();
  d.charpoly = characteristic_polynomial(d.laplacian);
  d.charpoly_signed = d.charpoly;
  if (n % 2 == 1)
    for (auto& c : d.charpoly_signed) c = -c;
  d.rho = rooted_forest_counts(G);
  for (std::size_t k = 0; k <= n && n > 0; ++k) {
    const long long c = d.charpoly[n - k];
    const long long expect = k < d.rho.size() ? d.rho[k] : 0;
    if ((k % 2 == 0 ? c : -c) != expect) throw InternalError("Laplacian coefficients disagree with rooted forest counts");
  }
  IntMatrix plus = d.laplacian, minus = d.laplacian;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : minus[i]) v = -v;
    plus[i][i] += 1;
    minus[i][i] += 1;
  }
  d.det_id_plus_l = static_cast<long long>(determinant(plus));
  d.det_id_minus_l = static_cast<long long>(determinant(minus));
  return d;
}

struct GraphEulerTerms {
  /// Coefficients from the vertex-disjoint cycle census with the homological
  /// shift carried by the sign of each complement's Euler characteristic.
  EulerPolynomial shifted;
  /// Same census with the complement Euler characteristic taken unsigned.
  EulerPolynomial unsigned_complement;
};

/// chi_t of a graph from cycle data alone: the constant term is
/// -sum_k (-1)^k rho_k and, for j >= 1, every non-spanning vertex-disjoint set
/// C with |C| = j contributes 2^j ((-1)^l chi(K_C) + (-1)^(l-1)) and every
/// 2-factor 2^j (-1)^(l-1), where l is the total length of C and K_C the
/// discrete Morse complex of the complement of C in the subdivision.
inline GraphEulerTerms chi_t_graph_terms(const SimplicialComplex& G) {
  detail::require_graph(G, "chi_t_graph");
  FacePoset F(G);
  GraphEulerTerms out;
  long long constant = 0;
  auto rho = rooted_forest_counts(G);
  for (std::size_t k = 0; k < rho.size(); ++k) constant -= (k % 2 == 0 ? 1 : -1) * rho[k];
  out.shifted.coefficients[0] = constant;
  out.unsigned_complement.coefficients[0] = constant;
  for (const auto& C : vd_cycle_collections(G)) {
    if (C.empty()) continue;
    const int j = static_cast<int>(C.size());
    const long long weight = 1LL << C.size();
    const long long len = static_cast<long long>(total_length(C));
    const long long terminal = (len - 1) % 2 == 0 ? 1 : -1;
    if (covers_all_vertices(G, C)) {
      out.shifted.coefficients[j] += weight * terminal;
      out.unsigned_complement.coefficients[j] += weight * terminal;
      continue;
    }
    auto K = restricted_morse_complex(complement_of_nodes(F, subdivision_nodes(G, C)));
    long long chi = 0;
    for (int d = 0; d <= K.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(K.count_of_dim(d));
    out.shifted.coefficients[j] += weight * ((len % 2 == 0 ? chi : -chi) + terminal);
    out.unsigned_complement.coefficients[j] += weight * (chi + terminal);
  }
  return out;
}

inline EulerPolynomial chi_t_graph(const SimplicialComplex& G) { return chi_t_graph_terms(G).shifted; }

}  // namespace mfc
