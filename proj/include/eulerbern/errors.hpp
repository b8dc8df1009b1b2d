#pragma once

#include <stdexcept>
#include <string>

namespace eulerbern {

/// Raised when two routes that must agree on an exact value do not.
class IdentityViolation : public std::logic_error {
 public:
  explicit IdentityViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace eulerbern
