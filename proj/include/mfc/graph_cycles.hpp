#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mfc/errors.hpp"
#include "mfc/matching.hpp"
#include "mfc/simplicial_complex.hpp"

namespace mfc {

/// An unoriented simple cycle of a graph. Vertices are listed starting at the
/// smallest one, heading toward its smaller neighbour on the cycle; edges are
/// sorted simplex ids of the graph.
struct GraphCycle {
  std::vector<VertexId> vertices;
  std::vector<std::size_t> edges;

  [[nodiscard]] std::size_t length() const { return edges.size(); }
  friend bool operator==(const GraphCycle& a, const GraphCycle& b) { return a.edges == b.edges; }
  friend bool operator<(const GraphCycle& a, const GraphCycle& b) { return a.edges < b.edges; }
};

/// A set of pairwise vertex-disjoint cycles, sorted.
using CycleSet = std::vector<GraphCycle>;

inline std::size_t total_length(const CycleSet& c) {
  std::size_t n = 0;
  for (const auto& g : c) n += g.length();
  return n;
}

namespace detail {

inline void require_graph(const SimplicialComplex& G, const char* what) {
  if (!G.is_graph()) throw PreconditionError(std::string(what) + " requires a complex of dimension at most 1");
}

inline GraphCycle make_cycle(const SimplicialComplex& G, std::vector<VertexId> verts) {
  auto smallest = std::min_element(verts.begin(), verts.end());
  std::rotate(verts.begin(), smallest, verts.end());
  if (verts.size() > 2 && verts[1] > verts.back()) std::reverse(verts.begin() + 1, verts.end());
  GraphCycle c;
  for (std::size_t t = 0; t < verts.size(); ++t) {
    Simplex e{verts[t], verts[(t + 1) % verts.size()]};
    std::sort(e.begin(), e.end());
    c.edges.push_back(*G.find(e));
  }
  std::sort(c.edges.begin(), c.edges.end());
  c.vertices = std::move(verts);
  return c;
}

}  // namespace detail

/// Every simple cycle (length >= 3) of a graph, each reported once.
inline std::vector<GraphCycle> graph_simple_cycles(const SimplicialComplex& G) {
  detail::require_graph(G, "graph_simple_cycles");
  const std::size_t n = G.vertex_count();
  std::vector<std::vector<VertexId>> adj(n);
  auto [e0, e1] = G.range_of_dim(1);
  for (auto e = e0; e < e1; ++e) {
    const auto& s = G.simplex(e);
    adj[s[0]].push_back(s[1]);
    adj[s[1]].push_back(s[0]);
  }
  std::vector<GraphCycle> out;
  std::vector<VertexId> path;
  std::vector<char> on_path(n, 0);
  for (VertexId start = 0; start < n; ++start) {
    auto dfs = [&](auto&& self, VertexId v) -> void {
      for (auto w : adj[v]) {
        if (w == start && path.size() >= 3 && path[1] < path.back()) {
          out.push_back(detail::make_cycle(G, path));
        } else if (w > start && !on_path[w]) {
          on_path[w] = 1;
          path.push_back(w);
          self(self, w);
          path.pop_back();
          on_path[w] = 0;
        }
      }
    };
    path.assign(1, start);
    on_path[start] = 1;
    dfs(dfs, start);
    on_path[start] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All collections of pairwise vertex-disjoint cycles, including the empty one.
inline std::vector<CycleSet> vd_cycle_collections(const SimplicialComplex& G) {
  auto cycles = graph_simple_cycles(G);
  std::vector<CycleSet> out;
  CycleSet current;
  std::vector<char> used(G.vertex_count(), 0);
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    out.push_back(current);
    for (std::size_t i = from; i < cycles.size(); ++i) {
      const auto& c = cycles[i];
      if (std::any_of(c.vertices.begin(), c.vertices.end(), [&](VertexId v) { return used[v] != 0; })) continue;
      for (auto v : c.vertices) used[v] = 1;
      current.push_back(c);
      self(self, i + 1);
      current.pop_back();
      for (auto v : c.vertices) used[v] = 0;
    }
  };
  dfs(dfs, 0);
  return out;
}

inline bool covers_all_vertices(const SimplicialComplex& G, const CycleSet& c) {
  std::size_t covered = 0;
  for (const auto& g : c) covered += g.vertices.size();
  return G.vertex_count() > 0 && covered == G.vertex_count();
}

/// Spanning members of vd_cycle_collections.
inline std::vector<CycleSet> two_factors(const SimplicialComplex& G) {
  std::vector<CycleSet> out;
  for (auto& c : vd_cycle_collections(G))
    if (covers_all_vertices(G, c)) out.push_back(std::move(c));
  return out;
}

/// Maximum number of vertex-disjoint cycles.
inline std::size_t eta_via_cycles(const SimplicialComplex& G) {
  std::size_t best = 0;
  for (const auto& c : vd_cycle_collections(G)) best = std::max(best, c.size());
  return best;
}

/// Forgets the orientation of a supported collection on the face poset of a
/// graph: the graph edges lying on each oriented cycle, as a vertex-disjoint
/// cycle set.
inline CycleSet phi(const SimplicialComplex& G, const OrientedCycleCollection& C) {
  detail::require_graph(G, "phi");
  CycleSet out;
  std::vector<char> used(G.vertex_count(), 0);
  for (const auto& cyc : C.cycles()) {
    std::vector<VertexId> verts;
    for (auto node : cyc)
      if (G.dim_of(node) == 0) verts.push_back(G.simplex(node)[0]);
    for (auto v : verts) {
      if (used[v]) throw InternalError("phi: oriented cycles are not vertex-disjoint");
      used[v] = 1;
    }
    out.push_back(detail::make_cycle(G, std::move(verts)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Node ids (vertices and edges of G) of the subdivided cycles.
inline std::vector<NodeId> subdivision_nodes(const SimplicialComplex& G, const CycleSet& c) {
  std::vector<NodeId> nodes;
  for (const auto& g : c) {
    for (auto v : g.vertices) nodes.push_back(static_cast<NodeId>(*G.find(Simplex{v})));
    for (auto e : g.edges) nodes.push_back(static_cast<NodeId>(e));
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

}  // namespace mfc
