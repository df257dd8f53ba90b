#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mfc/digraph_cycles.hpp"
#include "mfc/errors.hpp"
#include "mfc/face_poset.hpp"
#include "mfc/options.hpp"

namespace mfc {

/// A set of pairwise node-disjoint arcs of a face poset, as sorted arc ids.
struct Matching {
  std::vector<ArcId> arcs;

  [[nodiscard]] std::size_t size() const { return arcs.size(); }
  [[nodiscard]] bool empty() const { return arcs.empty(); }
  [[nodiscard]] bool contains(ArcId a) const { return std::binary_search(arcs.begin(), arcs.end(), a); }

  friend bool operator==(const Matching&, const Matching&) = default;
  /// By size, then lexicographically.
  friend std::strong_ordering operator<=>(const Matching& a, const Matching& b) {
    if (a.arcs.size() != b.arcs.size()) return a.arcs.size() <=> b.arcs.size();
    return a.arcs <=> b.arcs;
  }
};

inline bool is_matching(const FacePoset& F, std::span<const ArcId> arcs) {
  std::vector<NodeId> ends;
  for (auto a : arcs) {
    if (a >= F.arc_count()) return false;
    ends.push_back(F.arc(a).upper);
    ends.push_back(F.arc(a).lower);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

/// Lazily yields every matching of a subgraph exactly once: by size, then
/// lexicographically in arc ids. The empty matching comes first.
class MatchingEnumerator {
 public:
  explicit MatchingEnumerator(const PosetSubgraph& H)
      : F_(&H.parent()), arcs_(H.arcs()), used_(H.parent().node_count(), 0) {}

  std::optional<Matching> next() {
    if (done_) return std::nullopt;
    if (target_ == 0) {
      target_ = 1;
      return Matching{};
    }
    while (true) {
      if (advance()) {
        yielded_at_target_ = true;
        Matching m;
        for (auto p : chosen_) m.arcs.push_back(arcs_[p]);
        return m;
      }
      if (!yielded_at_target_) {
        done_ = true;
        return std::nullopt;
      }
      ++target_;
      yielded_at_target_ = false;
    }
  }

 private:
  bool free_arc(std::size_t p) const {
    const auto& a = F_->arc(arcs_[p]);
    return !used_[a.upper] && !used_[a.lower];
  }
  void mark(std::size_t p, char v) {
    const auto& a = F_->arc(arcs_[p]);
    used_[a.upper] = v;
    used_[a.lower] = v;
  }

  // Next size-target_ combination in lexicographic order.
  bool advance() {
    std::size_t start = 0;
    if (chosen_.size() == target_) {
      start = chosen_.back() + 1;
      mark(chosen_.back(), 0);
      chosen_.pop_back();
    }
    while (true) {
      const std::size_t remaining = target_ - chosen_.size();
      std::size_t p = start;
      while (p < arcs_.size() && arcs_.size() - p >= remaining && !free_arc(p)) ++p;
      if (p < arcs_.size() && arcs_.size() - p >= remaining) {
        chosen_.push_back(p);
        mark(p, 1);
        if (chosen_.size() == target_) return true;
        start = p + 1;
        continue;
      }
      if (chosen_.empty()) return false;
      start = chosen_.back() + 1;
      mark(chosen_.back(), 0);
      chosen_.pop_back();
    }
  }

  const FacePoset* F_;
  std::vector<ArcId> arcs_;
  std::vector<char> used_;
  std::vector<std::size_t> chosen_;
  std::size_t target_ = 0;
  bool yielded_at_target_ = false;
  bool done_ = false;
};

inline std::vector<Matching> all_matchings(const PosetSubgraph& H) {
  std::vector<Matching> out;
  MatchingEnumerator e(H);
  while (auto m = e.next()) out.push_back(std::move(*m));
  return out;
}

/// All matchings of a subgraph, stored flat and grouped by size; each group is
/// in lexicographic order so faces can be located by binary search.
class MatchingLevels {
 public:
  MatchingLevels() = default;

  explicit MatchingLevels(const PosetSubgraph& H) {
    const auto& F = H.parent();
    const auto& arcs = H.arcs();
    std::vector<char> used(F.node_count(), 0);
    std::vector<ArcId> current;
    data_.assign(1, {});
    count_.assign(1, 1);
    // Pre-order DFS over increasing arc positions visits sets in lexicographic
    // order, so appending to per-size buckets keeps each bucket sorted.
    auto dfs = [&](auto&& self, std::size_t from) -> void {
      for (std::size_t p = from; p < arcs.size(); ++p) {
        const auto& a = F.arc(arcs[p]);
        if (used[a.upper] || used[a.lower]) continue;
        used[a.upper] = used[a.lower] = 1;
        current.push_back(arcs[p]);
        const std::size_t s = current.size();
        if (data_.size() <= s) {
          data_.resize(s + 1);
          count_.resize(s + 1, 0);
        }
        data_[s].insert(data_[s].end(), current.begin(), current.end());
        ++count_[s];
        self(self, p + 1);
        current.pop_back();
        used[a.upper] = used[a.lower] = 0;
      }
    };
    dfs(dfs, 0);
  }

  /// Largest matching size plus one.
  [[nodiscard]] std::size_t level_count() const { return count_.size(); }
  [[nodiscard]] std::size_t count(std::size_t size) const { return size < count_.size() ? count_[size] : 0; }
  [[nodiscard]] std::size_t total() const { return std::accumulate(count_.begin(), count_.end(), std::size_t{0}); }

  [[nodiscard]] std::span<const ArcId> get(std::size_t size, std::size_t index) const {
    return std::span<const ArcId>(data_[size]).subspan(index * size, size);
  }

  [[nodiscard]] std::optional<std::size_t> find(std::span<const ArcId> m) const {
    const std::size_t s = m.size();
    if (s >= count_.size()) return std::nullopt;
    if (s == 0) return 0;
    std::size_t lo = 0, hi = count_[s];
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto cand = get(s, mid);
      if (std::lexicographical_compare(cand.begin(), cand.end(), m.begin(), m.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < count_[s] && std::equal(m.begin(), m.end(), get(s, lo).begin())) return lo;
    return std::nullopt;
  }

 private:
  std::vector<std::vector<ArcId>> data_;
  std::vector<std::size_t> count_;
};

enum class CollectionKind { empty, non_maximal, maximal };

inline const char* to_string(CollectionKind k) {
  switch (k) {
    case CollectionKind::empty: return "empty";
    case CollectionKind::non_maximal: return "non-maximal";
    case CollectionKind::maximal: return "maximal";
  }
  return "?";
}

/// The oriented cycles a matching induces on a face poset. Each cycle is a
/// node sequence in traversal order of the reoriented poset, rotated to start
/// at its smallest node; the cycles are sorted, so equal collections compare
/// equal.
class OrientedCycleCollection {
 public:
  OrientedCycleCollection() = default;

  OrientedCycleCollection(const FacePoset& F, std::vector<std::vector<NodeId>> cycles)
      : cycles_(std::move(cycles)) {
    std::sort(cycles_.begin(), cycles_.end());
    const std::size_t n = cycles_.size();
    arcs_.resize(n);
    std::vector<NodeId> all_nodes;
    for (std::size_t c = 0; c < n; ++c) {
      const auto& cyc = cycles_[c];
      for (std::size_t t = 0; t < cyc.size(); ++t) {
        auto a = F.arc_between(cyc[t], cyc[(t + 1) % cyc.size()]);
        if (!a) throw InternalError("cycle step is not an arc of the face poset");
        arcs_[c].push_back(*a);
        all_nodes.push_back(cyc[t]);
      }
      std::sort(arcs_[c].begin(), arcs_[c].end());
    }
    std::sort(all_nodes.begin(), all_nodes.end());
    all_nodes.erase(std::unique(all_nodes.begin(), all_nodes.end()), all_nodes.end());
    nodes_ = std::move(all_nodes);

    independent_.assign(n, true);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        std::vector<ArcId> common;
        std::set_intersection(arcs_[a].begin(), arcs_[a].end(), arcs_[b].begin(), arcs_[b].end(),
                              std::back_inserter(common));
        if (!common.empty()) independent_[a] = independent_[b] = false;
        std::vector<NodeId> sa(cycles_[a]), sb(cycles_[b]), shared;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));
        if (!shared.empty()) parent[root(a)] = root(b);
      }
    for (std::size_t c = 0; c < n; ++c)
      if (root(c) == c) ++components_;

    if (n == 0)
      kind_ = CollectionKind::empty;
    else if (nodes_.size() == F.node_count())
      kind_ = CollectionKind::maximal;
    else
      kind_ = CollectionKind::non_maximal;
  }

  [[nodiscard]] const std::vector<std::vector<NodeId>>& cycles() const { return cycles_; }
  [[nodiscard]] std::size_t count() const { return cycles_.size(); }
  [[nodiscard]] bool empty() const { return cycles_.empty(); }
  /// mu: connected components of the union of the cycles.
  [[nodiscard]] std::size_t components() const { return components_; }
  /// mu_1: cycles sharing no arc with another cycle of this collection.
  [[nodiscard]] std::size_t independent_count() const {
    return static_cast<std::size_t>(std::count(independent_.begin(), independent_.end(), true));
  }
  [[nodiscard]] bool is_independent(std::size_t c) const { return independent_[c]; }
  [[nodiscard]] std::size_t length(std::size_t c) const { return cycles_[c].size(); }
  [[nodiscard]] std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> out;
    for (const auto& c : cycles_) out.push_back(c.size());
    return out;
  }
  /// Sorted arc ids traversed by cycle c.
  [[nodiscard]] const std::vector<ArcId>& cycle_arcs(std::size_t c) const { return arcs_[c]; }
  /// Sorted union of the nodes on all cycles.
  [[nodiscard]] const std::vector<NodeId>& nodes() const { return nodes_; }
  /// Number of distinct matched arcs on the cycles; each cycle node is
  /// covered by exactly one of them.
  [[nodiscard]] std::size_t matched_arc_total() const { return nodes_.size() / 2; }
  [[nodiscard]] CollectionKind kind() const { return kind_; }

  friend bool operator==(const OrientedCycleCollection& a, const OrientedCycleCollection& b) {
    return a.cycles_ == b.cycles_;
  }
  friend bool operator<(const OrientedCycleCollection& a, const OrientedCycleCollection& b) {
    return a.cycles_ < b.cycles_;
  }

 private:
  std::vector<std::vector<NodeId>> cycles_;
  std::vector<std::vector<ArcId>> arcs_;
  std::vector<NodeId> nodes_;
  std::vector<bool> independent_;
  std::size_t components_ = 0;
  CollectionKind kind_ = CollectionKind::empty;
};

/// Scratch space for repeated cycle queries against one face poset. Not
/// thread-safe; use one instance per thread.
class CycleFinder {
 public:
  explicit CycleFinder(const FacePoset& F)
      : F_(&F), local_(F.node_count(), kNone), matched_(F.arc_count(), 0) {}

  /// Number of directed simple cycles after reversing the arcs of m.
  std::size_t count(std::span<const ArcId> m) {
    build_local(m);
    std::size_t n = 0;
    for_each_simple_cycle(graph_, [&](std::span<const std::uint32_t>) { ++n; });
    reset(m);
    return n;
  }

  /// The cycles themselves, in global node ids, rotated to their smallest node.
  std::vector<std::vector<NodeId>> cycles(std::span<const ArcId> m) {
    build_local(m);
    std::vector<std::vector<NodeId>> out;
    for_each_simple_cycle(graph_, [&](std::span<const std::uint32_t> c) {
      auto& cyc = out.emplace_back();
      for (auto v : c) cyc.push_back(nodes_[v]);
    });
    reset(m);
    return out;
  }

  /// Reversal of m leaves the whole poset acyclic. Checked on the full
  /// reoriented digraph, independently of the cycle enumeration.
  bool acyclic(std::span<const ArcId> m) {
    for (auto a : m) matched_[a] = 1;
    Digraph g(F_->node_count());
    for (ArcId a = 0; a < F_->arc_count(); ++a) {
      const auto& arc = F_->arc(a);
      if (matched_[a])
        g[arc.lower].push_back(arc.upper);
      else
        g[arc.upper].push_back(arc.lower);
    }
    for (auto a : m) matched_[a] = 0;
    return is_dag(g);
  }

 private:
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  // Every node of an induced cycle is matched, so the search is confined to
  // the endpoints of m.
  void build_local(std::span<const ArcId> m) {
    nodes_.clear();
    for (auto a : m) {
      matched_[a] = 1;
      nodes_.push_back(F_->arc(a).upper);
      nodes_.push_back(F_->arc(a).lower);
    }
    std::sort(nodes_.begin(), nodes_.end());
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) local_[nodes_[i]] = i;
    graph_.assign(nodes_.size(), {});
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
      for (auto a : F_->down_arcs(nodes_[i])) {
        const auto lower = local_[F_->arc(a).lower];
        if (lower == kNone) continue;
        if (matched_[a])
          graph_[lower].push_back(i);
        else
          graph_[i].push_back(lower);
      }
    }
  }
  void reset(std::span<const ArcId> m) {
    for (auto a : m) matched_[a] = 0;
    for (auto v : nodes_) local_[v] = kNone;
  }

  const FacePoset* F_;
  std::vector<std::uint32_t> local_;
  std::vector<char> matched_;
  std::vector<NodeId> nodes_;
  Digraph graph_;
};

inline OrientedCycleCollection induced_cycles(const FacePoset& F, const Matching& m) {
  CycleFinder finder(F);
  return OrientedCycleCollection(F, finder.cycles(m.arcs));
}

/// J: number of oriented cycles m induces on the face poset.
inline std::size_t j_value(const FacePoset& F, const Matching& m) { return CycleFinder(F).count(m.arcs); }

inline bool is_acyclic(const FacePoset& F, const Matching& m) { return CycleFinder(F).acyclic(m.arcs); }

inline PosetSubgraph complement(const FacePoset& F, const OrientedCycleCollection& C) {
  return complement_of_nodes(F, C.nodes());
}

/// Swaps matched and unmatched arcs along an induced cycle that shares no arc
/// with any other induced cycle, reversing its orientation.
inline Matching click(const FacePoset& F, const Matching& m, std::size_t cycle_index) {
  auto C = induced_cycles(F, m);
  if (cycle_index >= C.count()) throw PreconditionError("click: no such induced cycle");
  if (!C.is_independent(cycle_index)) throw PreconditionError("click: cycle shares an arc with another induced cycle");
  std::vector<ArcId> out;
  const auto& loop = C.cycle_arcs(cycle_index);
  std::set_symmetric_difference(m.arcs.begin(), m.arcs.end(), loop.begin(), loop.end(), std::back_inserter(out));
  Matching result{std::move(out)};
  if (!is_matching(F, result.arcs)) throw InternalError("click produced a non-matching");
  return result;
}

/// Breadth-first search over click moves starting from a.
inline bool are_click_equivalent(const FacePoset& F, const Matching& a, const Matching& b) {
  if (a == b) return true;
  std::set<Matching> seen{a};
  std::queue<Matching> frontier;
  frontier.push(a);
  while (!frontier.empty()) {
    auto m = std::move(frontier.front());
    frontier.pop();
    auto C = induced_cycles(F, m);
    for (std::size_t c = 0; c < C.count(); ++c) {
      if (!C.is_independent(c)) continue;
      auto next = click(F, m, c);
      if (next == b) return true;
      if (seen.insert(next).second) frontier.push(std::move(next));
    }
  }
  return false;
}

}  // namespace mfc
