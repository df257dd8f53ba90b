#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "mfc/face_poset.hpp"
#include "mfc/graph_cycles.hpp"
#include "mfc/matching.hpp"
#include "mfc/options.hpp"
#include "mfc/simplicial_complex.hpp"

namespace mfc {

namespace detail {

inline std::string simplex_label(const SimplicialComplex& X, const Simplex& s) {
  std::string out = "[";
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t) out += ',';
    out += X.label(s[t]);
  }
  return out + "]";
}

/// Vertex labels for a complex whose vertices are the given poset arcs.
inline std::vector<std::string> arc_labels(const FacePoset& F, std::span<const ArcId> arcs) {
  std::vector<std::string> labels;
  for (auto a : arcs) {
    const auto& arc = F.arc(a);
    labels.push_back(simplex_label(F.complex(), F.complex().simplex(arc.upper)) + ">" +
                     simplex_label(F.complex(), F.complex().simplex(arc.lower)));
  }
  return labels;
}

/// Lexicographic DFS over the matchings of H that satisfy `keep`, which must
/// be inherited by subsets so rejected branches can be pruned. The empty
/// matching is not visited.
template <class Keep, class Visit>
void for_each_matching_pruned(const PosetSubgraph& H, Keep&& keep, Visit&& visit) {
  const auto& F = H.parent();
  const auto& arcs = H.arcs();
  std::vector<char> used(F.node_count(), 0);
  std::vector<ArcId> current;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t p = from; p < arcs.size(); ++p) {
      const auto& a = F.arc(arcs[p]);
      if (used[a.upper] || used[a.lower]) continue;
      current.push_back(arcs[p]);
      if (keep(std::span<const ArcId>(current))) {
        visit(std::span<const ArcId>(current));
        used[a.upper] = used[a.lower] = 1;
        self(self, p + 1);
        used[a.upper] = used[a.lower] = 0;
      }
      current.pop_back();
    }
  };
  dfs(dfs, 0);
}

/// Simplices over positions in H.arcs(); arcs that span no simplex are dropped
/// from the vertex set and the rest renumbered in order.
inline SimplicialComplex complex_over_subgraph_arcs(const PosetSubgraph& H, std::vector<Simplex> simplices) {
  auto labels = arc_labels(H.parent(), H.arcs());
  std::vector<char> present(labels.size(), 0);
  for (const auto& s : simplices)
    if (s.size() == 1) present[s[0]] = 1;
  std::vector<VertexId> renumber(labels.size(), 0);
  std::vector<std::string> kept;
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (present[v]) {
      renumber[v] = static_cast<VertexId>(kept.size());
      kept.push_back(std::move(labels[v]));
    }
  if (kept.size() != labels.size())
    for (auto& s : simplices)
      for (auto& v : s) v = renumber[v];
  return SimplicialComplex::from_closed(std::move(kept), std::move(simplices));
}

template <class Keep>
SimplicialComplex pruned_complex(const PosetSubgraph& H, Keep&& keep) {
  const auto& arcs = H.arcs();
  std::vector<Simplex> simplices;
  for_each_matching_pruned(H, keep, [&](std::span<const ArcId> m) {
    Simplex s;
    for (auto a : m)
      s.push_back(static_cast<VertexId>(std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin()));
    simplices.push_back(std::move(s));
  });
  return complex_over_subgraph_arcs(H, std::move(simplices));
}

}  // namespace detail

/// M(X): one (k-1)-simplex per matching of size k on the face poset; vertex i
/// is arc i of face_poset(X).
inline SimplicialComplex matching_complex(const SimplicialComplex& X, const Limits& limits = {}) {
  FacePoset F(X);
  check_arc_guard(F.arc_count(), limits);
  return detail::pruned_complex(PosetSubgraph::full(F), [](std::span<const ArcId>) { return true; });
}

/// M_k(X): matchings inducing at most k oriented cycles. Empty for k < 0.
inline SimplicialComplex filtration_complex(const SimplicialComplex& X, int k, const Limits& limits = {}) {
  FacePoset F(X);
  check_arc_guard(F.arc_count(), limits);
  auto H = PosetSubgraph::full(F);
  if (k < 0) return detail::complex_over_subgraph_arcs(H, {});
  CycleFinder finder(F);
  return detail::pruned_complex(H, [&](std::span<const ArcId> m) {
    return finder.count(m) <= static_cast<std::size_t>(k);
  });
}

/// Discrete Morse complex: acyclic matchings.
inline SimplicialComplex morse_complex(const SimplicialComplex& X, const Limits& limits = {}) {
  FacePoset F(X);
  check_arc_guard(F.arc_count(), limits);
  CycleFinder finder(F);
  return detail::pruned_complex(PosetSubgraph::full(F), [&](std::span<const ArcId> m) { return finder.acyclic(m); });
}

/// Number of acyclic matchings of the face poset, the empty one included.
inline std::size_t count_acyclic_matchings(const FacePoset& F) {
  CycleFinder finder(F);
  std::size_t n = 1;
  detail::for_each_matching_pruned(
      PosetSubgraph::full(F), [&](std::span<const ArcId> m) { return finder.acyclic(m); },
      [&](std::span<const ArcId>) { ++n; });
  return n;
}

/// Matchings of H whose reversal creates no directed cycle inside H; vertex i
/// is arc H.arcs()[i].
inline SimplicialComplex restricted_morse_complex(const PosetSubgraph& H) {
  const auto& F = H.parent();
  std::vector<std::uint32_t> local(F.node_count(), 0);
  for (std::uint32_t i = 0; i < H.nodes().size(); ++i) local[H.nodes()[i]] = i;
  std::vector<char> matched(F.arc_count(), 0);
  return detail::pruned_complex(H, [&](std::span<const ArcId> m) {
    for (auto a : m) matched[a] = 1;
    Digraph g(H.nodes().size());
    for (auto a : H.arcs()) {
      const auto& arc = F.arc(a);
      if (matched[a])
        g[local[arc.lower]].push_back(local[arc.upper]);
      else
        g[local[arc.upper]].push_back(local[arc.lower]);
    }
    for (auto a : m) matched[a] = 0;
    return is_dag(g);
  });
}

/// Matchings m' of the complement of C such that m' together with the loop
/// arcs of `witness` induces exactly C on the whole face poset.
inline SimplicialComplex ambient_morse_complex(const FacePoset& F, const OrientedCycleCollection& C,
                                               const Matching& witness) {
  auto H = complement(F, C);
  std::vector<ArcId> loop_arcs;
  for (auto a : witness.arcs)
    if (!H.contains_node(F.arc(a).upper)) loop_arcs.push_back(a);
  CycleFinder finder(F);
  std::vector<ArcId> full;
  return detail::pruned_complex(H, [&](std::span<const ArcId> m) {
    full.assign(loop_arcs.begin(), loop_arcs.end());
    full.insert(full.end(), m.begin(), m.end());
    std::sort(full.begin(), full.end());
    return finder.count(full) == C.count();
  });
}

/// Matching complex of a graph: vertices are edges of G, simplices are sets of
/// pairwise disjoint edges.
inline SimplicialComplex graph_matching_complex(const SimplicialComplex& G) {
  detail::require_graph(G, "graph_matching_complex");
  auto [e0, e1] = G.range_of_dim(1);
  std::vector<std::string> labels;
  for (auto e = e0; e < e1; ++e) labels.push_back(detail::simplex_label(G, G.simplex(e)));
  std::vector<Simplex> simplices;
  std::vector<char> used(G.vertex_count(), 0);
  Simplex current;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    for (auto e = from; e < e1; ++e) {
      const auto& s = G.simplex(e);
      if (used[s[0]] || used[s[1]]) continue;
      used[s[0]] = used[s[1]] = 1;
      current.push_back(static_cast<VertexId>(e - e0));
      simplices.push_back(current);
      self(self, e + 1);
      current.pop_back();
      used[s[0]] = used[s[1]] = 0;
    }
  };
  dfs(dfs, e0);
  return SimplicialComplex::from_closed(std::move(labels), std::move(simplices));
}

/// A distinct induced cycle collection together with the first matching (in
/// canonical order) that induces it.
struct SupportedCollection {
  OrientedCycleCollection cycles;
  Matching witness;
};

/// Every distinct collection of oriented cycles that is exactly the induced
/// set of some matching, the empty collection included, sorted canonically.
inline std::vector<SupportedCollection> supported_collections(const SimplicialComplex& X, const Limits& limits = {}) {
  FacePoset F(X);
  check_arc_guard(F.arc_count(), limits);
  MatchingLevels levels(PosetSubgraph::full(F));
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t s = 0; s < levels.level_count(); ++s)
    for (std::size_t i = 0; i < levels.count(s); ++i) order.emplace_back(s, i);

  std::vector<std::vector<std::vector<NodeId>>> found(order.size());
  parallel_chunks(order.size(), limits.threads, [&](std::size_t first, std::size_t last) {
    CycleFinder finder(F);
    for (auto t = first; t < last; ++t) {
      auto cycles = finder.cycles(levels.get(order[t].first, order[t].second));
      std::sort(cycles.begin(), cycles.end());
      found[t] = std::move(cycles);
    }
  });
  std::map<std::vector<std::vector<NodeId>>, std::size_t> first_seen;
  for (std::size_t t = 0; t < order.size(); ++t) first_seen.emplace(found[t], t);

  std::vector<SupportedCollection> out;
  for (auto& [cycles, t] : first_seen) {
    auto m = levels.get(order[t].first, order[t].second);
    out.push_back({OrientedCycleCollection(F, cycles), Matching{{m.begin(), m.end()}}});
  }
  return out;
}

/// Smallest k with M_k(X) = M(X): the largest number of oriented cycles any
/// matching induces. For graphs the result is cross-checked against the
/// maximum number of vertex-disjoint cycles.
inline std::size_t eta(const SimplicialComplex& X, const Limits& limits = {}) {
  FacePoset F(X);
  check_arc_guard(F.arc_count(), limits);
  MatchingLevels levels(PosetSubgraph::full(F));
  std::size_t best = 0;
  for (std::size_t s = 2; s < levels.level_count(); ++s) {
    std::vector<std::size_t> maxima;
    std::mutex guard;
    parallel_chunks(levels.count(s), limits.threads, [&](std::size_t first, std::size_t last) {
      CycleFinder finder(F);
      std::size_t local = 0;
      for (auto i = first; i < last; ++i) local = std::max(local, finder.count(levels.get(s, i)));
      std::lock_guard lock(guard);
      maxima.push_back(local);
    });
    for (auto v : maxima) best = std::max(best, v);
  }
  if (X.is_graph() && best != eta_via_cycles(X))
    throw InternalError("eta: matching count disagrees with vertex-disjoint cycle count");
  return best;
}

}  // namespace mfc
