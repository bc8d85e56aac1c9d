#pragma once

#include <stdexcept>

namespace hbcast {

/// Input violates an operation's precondition (bad ids, wrong shape, not a quasi-tree, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but exceeds what the exact algorithms here will attempt,
/// e.g. brute-force min-cut on more than kMaxBruteForceVertices vertices.
class CapacityExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hbcast
