#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace dsb {

// Nonnegative bribery cost with a saturating infinity. Addition never wraps:
// anything that would overflow collapses to infinity, and infinity absorbs.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr Cost(std::uint64_t v) : v_(v) {}  // NOLINT: costs are plain counts at call sites

  static constexpr Cost infinity() {
    Cost c;
    c.v_ = kInf;
    return c;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_finite() const { return v_ != kInf; }
  // Raw value; equals the sentinel when infinite.
  constexpr std::uint64_t value() const { return v_; }

  friend constexpr Cost operator+(Cost a, Cost b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    if (a.v_ > kInf - 1 - b.v_) return infinity();
    return Cost(a.v_ + b.v_);
  }
  constexpr Cost& operator+=(Cost o) { return *this = *this + o; }

  friend constexpr auto operator<=>(Cost a, Cost b) = default;

  friend std::string to_string(Cost c) {
    return c.is_infinite() ? "INF" : std::to_string(c.v_);
  }

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_ = 0;
};

}  // namespace dsb
