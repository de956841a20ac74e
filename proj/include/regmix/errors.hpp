#pragma once

#include <stdexcept>
#include <string>

namespace regmix {

// Invalid or corrupt observation data (non-positive values, bad checksums,
// degenerate samples).
class data_error : public std::runtime_error {
  public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// Text input that could not be parsed; carries the offending line number.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

// Numerical failure in an iterative routine (non-convergence, non-finite
// intermediate).
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace regmix
