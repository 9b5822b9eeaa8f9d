#pragma once

#include <stdexcept>
#include <string>

namespace cubehom {

/// Malformed or inconsistent user input (files, specs, endpoints, labels).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource limit was exceeded (chain counts, block sizes).
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cubehom
