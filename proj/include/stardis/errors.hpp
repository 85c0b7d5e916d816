#pragma once

#include <stdexcept>
#include <string>

namespace stardis {

// Thrown when a computation would exceed a configured work guard.
// Distinct from std::domain_error so callers (and the CLI) can map it
// to a dedicated exit status.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace stardis
