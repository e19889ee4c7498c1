#pragma once

#include <stdexcept>
#include <string>

namespace bcast {

// Malformed edge-list, broadcast file, or generator parameters.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A solver was handed a graph that is not connected.
class disconnected_error : public std::runtime_error {
public:
  disconnected_error() : std::runtime_error("graph is not connected") {}
  using std::runtime_error::runtime_error;
};

// An internal invariant (acyclicity, center uniqueness, ...) failed.
class invariant_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Oracle refused an instance above its configured vertex limit.
class limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace bcast
