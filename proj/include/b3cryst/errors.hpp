#pragma once

#include <stdexcept>
#include <string>

namespace b3cryst {

// Error taxonomy; the CLI maps each type to a distinct exit code.

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct membership_error : std::runtime_error {
  explicit membership_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct basis_error : std::runtime_error {
  explicit basis_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace b3cryst
