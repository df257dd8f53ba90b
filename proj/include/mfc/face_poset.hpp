#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mfc/simplicial_complex.hpp"

namespace mfc {

using NodeId = std::uint32_t;
using ArcId = std::uint32_t;

/// Codimension-one incidence, oriented from the larger simplex to its face.
struct Arc {
  NodeId upper;
  NodeId lower;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Hasse diagram of a simplicial complex. Node ids coincide with the
/// complex's canonical simplex ids; arcs are sorted by (upper, lower), which
/// is the canonical arc order used for every matching downstream.
class FacePoset {
 public:
  FacePoset() = default;

  explicit FacePoset(SimplicialComplex complex) : complex_(std::move(complex)) {
    const std::size_t n = complex_.size();
    Simplex face;
    for (std::size_t id = 0; id < n; ++id) {
      const auto& s = complex_.simplex(id);
      if (s.size() < 2) continue;
      std::vector<NodeId> lowers;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != drop) face.push_back(s[t]);
        lowers.push_back(static_cast<NodeId>(*complex_.find(face)));
      }
      std::sort(lowers.begin(), lowers.end());
      for (auto l : lowers) arcs_.push_back({static_cast<NodeId>(id), l});
    }
    down_.assign(n, {});
    up_.assign(n, {});
    for (ArcId a = 0; a < arcs_.size(); ++a) {
      down_[arcs_[a].upper].push_back(a);
      up_[arcs_[a].lower].push_back(a);
    }
  }

  [[nodiscard]] const SimplicialComplex& complex() const { return complex_; }
  [[nodiscard]] std::size_t node_count() const { return complex_.size(); }
  [[nodiscard]] std::size_t arc_count() const { return arcs_.size(); }
  [[nodiscard]] const Arc& arc(ArcId a) const { return arcs_[a]; }
  [[nodiscard]] const std::vector<Arc>& arcs() const { return arcs_; }
  [[nodiscard]] int dim(NodeId v) const { return complex_.dim_of(v); }

  /// Arcs leaving v toward its codimension-one faces.
  [[nodiscard]] std::span<const ArcId> down_arcs(NodeId v) const { return down_[v]; }
  /// Arcs arriving at v from its codimension-one cofaces.
  [[nodiscard]] std::span<const ArcId> up_arcs(NodeId v) const { return up_[v]; }

  [[nodiscard]] std::optional<ArcId> find_arc(NodeId upper, NodeId lower) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{upper, lower},
                               [](const Arc& a, const Arc& b) {
                                 return a.upper != b.upper ? a.upper < b.upper : a.lower < b.lower;
                               });
    if (it == arcs_.end() || !(*it == Arc{upper, lower})) return std::nullopt;
    return static_cast<ArcId>(it - arcs_.begin());
  }
  /// Arc joining u and v in either direction.
  [[nodiscard]] std::optional<ArcId> arc_between(NodeId u, NodeId v) const {
    if (auto a = find_arc(u, v)) return a;
    return find_arc(v, u);
  }

 private:
  SimplicialComplex complex_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> down_;
  std::vector<std::vector<ArcId>> up_;
};

inline FacePoset face_poset(const SimplicialComplex& X) { return FacePoset(X); }

/// Node-induced subgraph of a face poset. Isolated nodes are kept. The parent
/// poset must outlive the subgraph.
class PosetSubgraph {
 public:
  static PosetSubgraph full(const FacePoset& parent) {
    std::vector<NodeId> all(parent.node_count());
    for (NodeId v = 0; v < all.size(); ++v) all[v] = v;
    return induced(parent, all);
  }

  static PosetSubgraph induced(const FacePoset& parent, std::span<const NodeId> nodes) {
    PosetSubgraph h;
    h.parent_ = &parent;
    h.member_.assign(parent.node_count(), false);
    for (auto v : nodes) h.member_[v] = true;
    for (NodeId v = 0; v < parent.node_count(); ++v)
      if (h.member_[v]) h.nodes_.push_back(v);
    for (ArcId a = 0; a < parent.arc_count(); ++a) {
      const auto& arc = parent.arc(a);
      if (h.member_[arc.upper] && h.member_[arc.lower]) h.arcs_.push_back(a);
    }
    return h;
  }

  [[nodiscard]] const FacePoset& parent() const { return *parent_; }
  [[nodiscard]] const std::vector<NodeId>& nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<ArcId>& arcs() const { return arcs_; }
  [[nodiscard]] bool contains_node(NodeId v) const { return member_[v]; }
  [[nodiscard]] bool contains_arc(ArcId a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
  }

 private:
  const FacePoset* parent_ = nullptr;
  std::vector<bool> member_;
  std::vector<NodeId> nodes_;
  std::vector<ArcId> arcs_;
};

/// Subgraph on every node not in `removed`, with every arc avoiding them.
inline PosetSubgraph complement_of_nodes(const FacePoset& F, std::span<const NodeId> removed) {
  std::vector<bool> drop(F.node_count(), false);
  for (auto v : removed) drop[v] = true;
  std::vector<NodeId> keep;
  for (NodeId v = 0; v < F.node_count(); ++v)
    if (!drop[v]) keep.push_back(v);
  return PosetSubgraph::induced(F, keep);
}

}  // namespace mfc
