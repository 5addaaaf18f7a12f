#pragma once

#include <stdexcept>
#include <string>

namespace lwskit {

// Error taxonomy mirrored by the CLI exit codes (see tools/lwskit.cpp).
struct schema_error : std::runtime_error {
  explicit schema_error(const std::string& m) : std::runtime_error(m) {}
};

struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& m) : std::runtime_error(m) {}
};

struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& m) : std::runtime_error(m) {}
};

struct verify_error : std::runtime_error {
  explicit verify_error(const std::string& m) : std::runtime_error(m) {}
};

struct overflow_error : std::runtime_error {
  explicit overflow_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace lwskit
