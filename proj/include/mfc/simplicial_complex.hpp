#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfc/errors.hpp"

namespace mfc {

using VertexId = std::uint32_t;

/// A simplex as a strictly increasing array of dense vertex ids.
using Simplex = std::vector<VertexId>;

/// Finite abstract simplicial complex, closed under taking nonempty faces.
///
/// Vertex labels are canonicalized to dense ids 0..n-1 on ingestion (numeric
/// order when every label is an integer, lexicographic otherwise); the original
/// labels are kept for reporting. Simplices are stored in a fixed canonical
/// order, by dimension and then lexicographically, and that order defines every
/// downstream basis. The empty simplex is never stored.
class SimplicialComplex {
 public:
  SimplicialComplex() : dim_offset_{0} {}

  /// Adopts a family of simplices that must already be closed under faces.
  /// Throws InputError if it is not, or if a vertex id has no label.
  static SimplicialComplex from_closed(std::vector<std::string> labels,
                                       std::vector<Simplex> simplices) {
    SimplicialComplex out;
    out.labels_ = std::move(labels);
    for (auto& s : simplices) {
      if (s.empty()) throw InputError("empty simplex in closed family");
      if (!std::is_sorted(s.begin(), s.end()) ||
          std::adjacent_find(s.begin(), s.end()) != s.end()) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
      }
      if (s.back() >= out.labels_.size())
        throw InputError("simplex refers to an unlabeled vertex");
    }
    std::sort(simplices.begin(), simplices.end(), canonical_less);
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    out.simplices_ = std::move(simplices);
    out.rebuild_offsets();

    if (out.count_of_dim(0) != out.labels_.size())
      throw InputError("every labeled vertex must appear as a 0-simplex");
    Simplex face;
    for (const auto& s : out.simplices_) {
      if (s.size() < 2) continue;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != drop) face.push_back(s[t]);
        if (!out.find(face)) throw InputError("family is not closed under faces");
      }
    }
    return out;
  }

  [[nodiscard]] std::size_t vertex_count() const { return labels_.size(); }
  [[nodiscard]] std::size_t size() const { return simplices_.size(); }
  [[nodiscard]] bool empty() const { return simplices_.empty(); }

  /// -1 for the empty complex.
  [[nodiscard]] int dimension() const { return static_cast<int>(dim_offset_.size()) - 2; }
  [[nodiscard]] bool is_graph() const { return dimension() <= 1; }

  [[nodiscard]] const Simplex& simplex(std::size_t id) const { return simplices_[id]; }
  [[nodiscard]] int dim_of(std::size_t id) const {
    return static_cast<int>(simplices_[id].size()) - 1;
  }
  [[nodiscard]] const std::vector<Simplex>& simplices() const { return simplices_; }

  /// Index range [first, last) of the simplices of dimension d.
  [[nodiscard]] std::pair<std::size_t, std::size_t> range_of_dim(int d) const {
    if (d < 0 || d > dimension()) return {size(), size()};
    return {dim_offset_[static_cast<std::size_t>(d)],
            dim_offset_[static_cast<std::size_t>(d) + 1]};
  }
  [[nodiscard]] std::size_t count_of_dim(int d) const {
    auto [a, b] = range_of_dim(d);
    return b - a;
  }
  [[nodiscard]] std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (int d = 0; d <= dimension(); ++d) f.push_back(count_of_dim(d));
    return f;
  }

  [[nodiscard]] std::optional<std::size_t> find(const Simplex& s) const {
    if (s.empty()) return std::nullopt;
    auto [a, b] = range_of_dim(static_cast<int>(s.size()) - 1);
    auto first = simplices_.begin() + static_cast<std::ptrdiff_t>(a);
    auto last = simplices_.begin() + static_cast<std::ptrdiff_t>(b);
    auto it = std::lower_bound(first, last, s);
    if (it == last || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - simplices_.begin());
  }
  [[nodiscard]] bool contains(const Simplex& s) const { return find(s).has_value(); }

  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::string& label(VertexId v) const { return labels_[v]; }

  /// Maximal simplices, in canonical order.
  [[nodiscard]] std::vector<Simplex> facets() const {
    std::set<Simplex> covered;
    for (const auto& s : simplices_) {
      if (s.size() < 2) continue;
      Simplex face;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t t = 0; t < s.size(); ++t)
          if (t != drop) face.push_back(s[t]);
        covered.insert(face);
      }
    }
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
      if (!covered.count(s)) out.push_back(s);
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.simplices_ == b.simplices_;
  }

  static bool canonical_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

 private:
  void rebuild_offsets() {
    dim_offset_.assign(1, 0);
    std::size_t i = 0;
    for (std::size_t card = 1; i < simplices_.size(); ++card) {
      while (i < simplices_.size() && simplices_[i].size() == card) ++i;
      dim_offset_.push_back(i);
    }
  }

  std::vector<std::string> labels_;
  std::vector<Simplex> simplices_;
  std::vector<std::size_t> dim_offset_;
};

namespace detail {

inline std::optional<long long> parse_integer(std::string_view s) {
  long long v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return v;
}

}  // namespace detail

/// Downward closure of the given facets. Duplicate and dominated facets are
/// absorbed; an empty facet is an input error, an empty list the empty complex.
inline SimplicialComplex build_complex(const std::vector<std::vector<std::string>>& facets) {
  std::set<std::string> label_set;
  for (const auto& f : facets) {
    if (f.empty()) throw InputError("empty facet");
    for (const auto& l : f) {
      if (l.empty()) throw InputError("empty vertex label");
      label_set.insert(l);
    }
  }
  std::vector<std::string> labels(label_set.begin(), label_set.end());
  bool numeric = std::all_of(labels.begin(), labels.end(),
                             [](const std::string& l) { return detail::parse_integer(l).has_value(); });
  if (numeric) {
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
      return *detail::parse_integer(a) < *detail::parse_integer(b);
    });
    // "01" and "1" name the same integer; keep the first spelling.
    labels.erase(std::unique(labels.begin(), labels.end(),
                             [](const std::string& a, const std::string& b) {
                               return *detail::parse_integer(a) == *detail::parse_integer(b);
                             }),
                 labels.end());
  }
  auto id_of = [&](const std::string& l) -> VertexId {
    if (numeric) {
      auto v = *detail::parse_integer(l);
      auto it = std::lower_bound(labels.begin(), labels.end(), v,
                                 [](const std::string& a, long long b) { return *detail::parse_integer(a) < b; });
      return static_cast<VertexId>(it - labels.begin());
    }
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };

  std::set<Simplex> closure;
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& l : f) s.push_back(id_of(l));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() > 24) throw ResourceError("facet with more than 24 vertices");
    if (closure.count(s)) continue;
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (std::uint32_t t = 0; t < n; ++t)
        if (mask & (1u << t)) face.push_back(s[t]);
      closure.insert(std::move(face));
    }
  }
  return SimplicialComplex::from_closed(std::move(labels),
                                        std::vector<Simplex>(closure.begin(), closure.end()));
}

inline SimplicialComplex build_complex(const std::vector<std::vector<long long>>& facets) {
  std::vector<std::vector<std::string>> as_text;
  as_text.reserve(facets.size());
  for (const auto& f : facets) {
    auto& row = as_text.emplace_back();
    for (auto v : f) row.push_back(std::to_string(v));
  }
  return build_complex(as_text);
}

/// Facet text format: one facet per line, whitespace-separated labels;
/// blank lines and lines starting with '#' are skipped.
inline std::vector<std::vector<std::string>> read_facets(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    auto& f = facets.emplace_back();
    for (std::string tok; ls >> tok;) f.push_back(tok);
  }
  return facets;
}

inline SimplicialComplex load_facet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open facet file: " + path);
  return build_complex(read_facets(in));
}

namespace detail {

inline long long parse_size(std::string_view text, std::string_view what) {
  auto v = parse_integer(text);
  if (!v) throw InputError("invalid size '" + std::string(text) + "' for " + std::string(what));
  return *v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Canonical complexes by family name:
///   simplex:n (n >= 0), cycle:n (n >= 3), complete:n (n >= 1), path:n (n >= 1
///   vertices), star:n (n >= 0 leaves), pseudotree:L[:p1,p2,...] where the
///   cycle is 0..L-1 and extra vertex L+i hangs off the earlier vertex p_i.
inline SimplicialComplex generate(std::string_view spec) {
  auto parts = detail::split(spec, ':');
  const auto family = parts[0];
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi)
      throw InputError("malformed generator spec '" + std::string(spec) + "'");
  };
  std::vector<std::vector<long long>> facets;

  if (family == "simplex") {
    need(2, 2);
    auto n = detail::parse_size(parts[1], family);
    if (n < 0 || n > 20) throw InputError("simplex size out of range");
    auto& f = facets.emplace_back();
    for (long long v = 0; v <= n; ++v) f.push_back(v);
  } else if (family == "cycle") {
    need(2, 2);
    auto n = detail::parse_size(parts[1], family);
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    for (long long v = 0; v < n; ++v) facets.push_back({v, (v + 1) % n});
  } else if (family == "complete") {
    need(2, 2);
    auto n = detail::parse_size(parts[1], family);
    if (n < 1) throw InputError("complete graph needs at least 1 vertex");
    if (n == 1) facets.push_back({0});
    for (long long a = 0; a < n; ++a)
      for (long long b = a + 1; b < n; ++b) facets.push_back({a, b});
  } else if (family == "path") {
    need(2, 2);
    auto n = detail::parse_size(parts[1], family);
    if (n < 1) throw InputError("path needs at least 1 vertex");
    if (n == 1) facets.push_back({0});
    for (long long v = 0; v + 1 < n; ++v) facets.push_back({v, v + 1});
  } else if (family == "star") {
    need(2, 2);
    auto n = detail::parse_size(parts[1], family);
    if (n < 0) throw InputError("star size out of range");
    if (n == 0) facets.push_back({0});
    for (long long v = 1; v <= n; ++v) facets.push_back({0, v});
  } else if (family == "pseudotree") {
    need(2, 3);
    auto len = detail::parse_size(parts[1], family);
    if (len < 3) throw InputError("pseudotree cycle needs at least 3 vertices");
    for (long long v = 0; v < len; ++v) facets.push_back({v, (v + 1) % len});
    if (parts.size() == 3 && !parts[2].empty()) {
      long long next = len;
      for (auto p : detail::split(parts[2], ',')) {
        auto parent = detail::parse_size(p, family);
        if (parent < 0 || parent >= next) throw InputError("pseudotree parent out of range");
        facets.push_back({parent, next++});
      }
    }
  } else {
    throw InputError("unknown generator family '" + std::string(family) + "'");
  }
  return build_complex(facets);
}

}  // namespace mfc
