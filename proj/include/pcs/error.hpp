#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pcs {

// Base for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad letters, unknown names, improper codes, ...
struct InputError : Error {
  explicit InputError(const std::string& what) : Error(what) {}
};

// Model validation failure; carries every violation found.
struct ModelError : Error {
  std::vector<std::string> issues;
  explicit ModelError(std::vector<std::string> found)
      : Error(join(found)), issues(std::move(found)) {}

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "invalid model:";
    for (const auto& m : v) {
      s += "\n  - " + m;
    }
    return s;
  }
};

// A step or value ceiling was hit before the computation finished.
struct BudgetError : Error {
  explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace pcs
