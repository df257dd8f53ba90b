#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mfc {

/// Adjacency-list digraph on vertices 0..n-1.
using Digraph = std::vector<std::vector<std::uint32_t>>;

namespace detail {

class JohnsonCircuits {
 public:
  explicit JohnsonCircuits(const Digraph& g)
      : g_(g), n_(g.size()), in_scc_(n_), blocked_(n_), blocked_by_(n_) {}

  template <class Visit>
  void run(Visit&& visit) {
    for (std::uint32_t s = 0; s < n_; ++s) {
      if (!restrict_to_scc(s)) continue;
      for (std::uint32_t v = 0; v < n_; ++v) {
        blocked_[v] = false;
        blocked_by_[v].clear();
      }
      start_ = s;
      circuit(s, visit);
    }
  }

 private:
  // Marks the strongly connected component of s in the subgraph induced by
  // vertices >= s. Returns false when it holds no cycle.
  bool restrict_to_scc(std::uint32_t s) {
    std::vector<char> fwd(n_, 0), bwd(n_, 0);
    std::vector<std::uint32_t> stack{s};
    fwd[s] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : g_[v])
        if (w >= s && !fwd[w]) {
          fwd[w] = 1;
          stack.push_back(w);
        }
    }
    Digraph rev(n_);
    for (std::uint32_t v = s; v < n_; ++v)
      if (fwd[v])
        for (auto w : g_[v])
          if (w >= s) rev[w].push_back(v);
    stack.push_back(s);
    bwd[s] = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : rev[v])
        if (!bwd[w]) {
          bwd[w] = 1;
          stack.push_back(w);
        }
    }
    bool any = false;
    for (std::uint32_t v = 0; v < n_; ++v) {
      in_scc_[v] = v >= s && fwd[v] && bwd[v];
      if (in_scc_[v] && v != s) any = true;
    }
    if (!any)
      for (auto w : g_[s])
        if (w == s) any = true;
    return any;
  }

  void unblock(std::uint32_t u) {
    blocked_[u] = false;
    auto pending = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (auto w : pending)
      if (blocked_[w]) unblock(w);
  }

  template <class Visit>
  bool circuit(std::uint32_t v, Visit& visit) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (auto w : g_[v]) {
      if (!in_scc_[w]) continue;
      if (w == start_) {
        visit(std::span<const std::uint32_t>(path_));
        found = true;
      } else if (!blocked_[w] && circuit(w, visit)) {
        found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (auto w : g_[v]) {
        if (!in_scc_[w]) continue;
        auto& list = blocked_by_[w];
        bool present = false;
        for (auto x : list) present |= (x == v);
        if (!present) list.push_back(v);
      }
    }
    path_.pop_back();
    return found;
  }

  const Digraph& g_;
  std::size_t n_;
  std::uint32_t start_ = 0;
  std::vector<char> in_scc_;
  std::vector<char> blocked_;
  std::vector<std::vector<std::uint32_t>> blocked_by_;
  std::vector<std::uint32_t> path_;
};

}  // namespace detail

/// Calls visit(span) once per directed simple cycle of g (Johnson's
/// algorithm). Each cycle is reported starting at its smallest vertex, in
/// traversal order; the span is only valid during the call.
template <class Visit>
void for_each_simple_cycle(const Digraph& g, Visit&& visit) {
  detail::JohnsonCircuits(g).run(visit);
}

inline std::vector<std::vector<std::uint32_t>> simple_cycles(const Digraph& g) {
  std::vector<std::vector<std::uint32_t>> out;
  for_each_simple_cycle(g, [&](std::span<const std::uint32_t> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

/// Kahn's algorithm.
inline bool is_dag(const Digraph& g) {
  std::vector<std::size_t> indeg(g.size(), 0);
  for (const auto& out : g)
    for (auto w : out) ++indeg[w];
  std::vector<std::uint32_t> ready;
  for (std::uint32_t v = 0; v < g.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto w : g[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == g.size();
}

}  // namespace mfc
