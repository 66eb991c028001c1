#pragma once

#include <stdexcept>
#include <string>

namespace magicrank {

/// Thrown when an exhaustive computation would exceed its documented work cap.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a certified comparison cannot be resolved within the precision cap.
class Indeterminate : public std::runtime_error {
 public:
  explicit Indeterminate(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace magicrank
