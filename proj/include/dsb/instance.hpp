#pragma once

#include <utility>
#include <vector>

#include "dsb/cost.hpp"
#include "dsb/election.hpp"
#include "dsb/errors.hpp"
#include "dsb/pricing.hpp"

namespace dsb {

// One destructive shift bribery problem: dethrone `despised` within `budget`,
// paying per-voter prices for backward shifts.
struct BriberyInstance {
  Election election;
  int despised = 0;
  Cost budget = Cost(0);
  std::vector<PriceFunction> prices;  // one per voter
};

inline void validate_instance(const BriberyInstance& inst) {
  if (inst.despised < 0 || inst.despised >= inst.election.num_candidates())
    throw InputError("despised candidate index out of range");
  if (static_cast<int>(inst.prices.size()) != inst.election.num_voters())
    throw InputError("need exactly one price function per voter");
  if (inst.budget.is_infinite()) throw InputError("budget must be finite");
}

// Solver output. When feasible, `shifts` is a witness whose cost equals
// min_cost and whose application leaves the despised candidate short of a
// unique win.
struct Solution {
  bool feasible = false;
  Cost min_cost = Cost::infinity();
  ShiftVector shifts;
};

}  // namespace dsb
