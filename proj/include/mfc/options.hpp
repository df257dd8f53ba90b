#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "mfc/errors.hpp"

namespace mfc {

/// Knobs for the exponential-time enumerations.
struct Limits {
  /// Largest face-poset arc count accepted by full matching enumeration.
  std::size_t max_arcs = 40;
  /// Worker threads for embarrassingly parallel loops; never affects results.
  unsigned threads = 1;
};

inline void check_arc_guard(std::size_t arcs, const Limits& limits) {
  if (arcs > limits.max_arcs)
    throw ResourceError("face poset has " + std::to_string(arcs) + " arcs, above the guard of " +
                        std::to_string(limits.max_arcs));
}

/// Splits [0, n) into contiguous chunks and runs body(first, last) on each,
/// one chunk per thread. Exceptions are rethrown on the calling thread.
template <class Body>
void parallel_chunks(std::size_t n, unsigned threads, Body&& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n / 256 + 1));
  if (workers == 1) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t step = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t first = std::min(n, w * step);
    const std::size_t last = std::min(n, first + step);
    pool.emplace_back([&, w, first, last] {
      try {
        body(first, last);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace mfc
