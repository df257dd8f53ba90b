#pragma once

#include <stdexcept>
#include <string>

namespace mfc {

/// Malformed user input: bad facet files, unknown generator families, out-of-range sizes.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (e.g. a graph-only routine given a 2-complex).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The input exceeds a configured size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mfc
