#pragma once

#include <stdexcept>
#include <string>

namespace secn {

// Invalid flags or configuration (CLI exit status 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable, malformed, or mismatched data and checkpoint files (CLI exit status 2).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// NaN/Inf gradients, divergence, or a failed numeric check (CLI exit status 3).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace secn
