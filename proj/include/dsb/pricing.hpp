#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dsb/cost.hpp"
#include "dsb/election.hpp"
#include "dsb/errors.hpp"

namespace dsb {

// Per-voter backward-shift price function: rho(0) = 0, nondecreasing on the
// feasible range, +infinity once the despised candidate would move past the
// last position. The feasible range (m - pos_v(d)) is supplied at evaluation
// time; only finite entries are stored. Validation happens at construction,
// evaluation never fails.
class PriceFunction {
 public:
  enum class Kind { kUnit, kAllOrNothing, kListed };

  static PriceFunction unit() { return PriceFunction(Kind::kUnit, Cost(0), {}); }

  // Any nonzero shift costs `c` (which may be infinite).
  static PriceFunction all_or_nothing(Cost c) {
    return PriceFunction(Kind::kAllOrNothing, c, {});
  }

  // costs[i] = price of shifting back i positions; costs[0] must be 0 and the
  // table nondecreasing. Shifts past the end of the table cost +infinity.
  static PriceFunction listed(std::vector<std::uint64_t> costs) {
    if (costs.empty() || costs[0] != 0)
      throw InputError("listed price function must start with rho(0) = 0");
    for (std::size_t i = 1; i < costs.size(); ++i)
      if (costs[i] < costs[i - 1])
        throw InputError("listed price function must be nondecreasing");
    return PriceFunction(Kind::kListed, Cost(0), std::move(costs));
  }

  Kind kind() const { return kind_; }
  Cost all_or_nothing_cost() const { return aon_; }
  const std::vector<std::uint64_t>& listed_costs() const { return costs_; }

  // Price of shifting back `shift` positions when at most `max_feasible_shift`
  // positions remain below the despised candidate.
  Cost price(int shift, int max_feasible_shift) const {
    if (shift == 0) return Cost(0);
    if (shift < 0 || shift > max_feasible_shift) return Cost::infinity();
    switch (kind_) {
      case Kind::kUnit:
        return Cost(static_cast<std::uint64_t>(shift));
      case Kind::kAllOrNothing:
        return aon_;
      case Kind::kListed:
        return shift < static_cast<int>(costs_.size()) ? Cost(costs_[shift])
                                                       : Cost::infinity();
    }
    return Cost::infinity();
  }

 private:
  PriceFunction(Kind kind, Cost aon, std::vector<std::uint64_t> costs)
      : kind_(kind), aon_(aon), costs_(std::move(costs)) {}

  Kind kind_;
  Cost aon_;
  std::vector<std::uint64_t> costs_;
};

// Sum of per-voter prices for a shift vector, saturating at infinity.
inline Cost total_cost(const std::vector<PriceFunction>& prices, const Election& e,
                       int despised, const ShiftVector& shifts) {
  if (prices.size() != shifts.size() ||
      static_cast<int>(prices.size()) != e.num_voters())
    throw InputError("price/shift vector length does not match voter count");
  Cost total(0);
  for (int v = 0; v < e.num_voters(); ++v)
    total += prices[v].price(shifts[v], max_shift(e, v, despised));
  return total;
}

}  // namespace dsb
