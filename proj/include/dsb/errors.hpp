#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace dsb {

// Bad arguments, malformed files, violated preconditions. CLI exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with a 1-based line number. CLI exit code 2.
struct ParseError : InputError {
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// Search exceeded its node budget. Carries the best cost bound found so far
// (empty if no solution was seen before the limit). CLI exit code 3.
struct ResourceError : std::runtime_error {
  ResourceError(const std::string& what, std::optional<std::uint64_t> bound)
      : std::runtime_error(what), best_bound(bound) {}
  std::optional<std::uint64_t> best_bound;
};

}  // namespace dsb
