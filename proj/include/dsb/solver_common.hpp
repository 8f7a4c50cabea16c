#pragma once

#include <utility>
#include <vector>

#include "dsb/instance.hpp"
#include "dsb/rules.hpp"

namespace dsb::detail {

// Unconstrained minimum over successful briberies; infinite cost = impossible.
// Budget is compared afterwards so the same machinery serves `margin`.
struct Optimum {
  Cost cost = Cost::infinity();
  ShiftVector shifts;
};

inline Optimum zero_optimum(const BriberyInstance& inst) {
  Optimum o;
  o.cost = Cost(0);
  o.shifts.assign(inst.election.num_voters(), 0);
  return o;
}

inline Solution finalize(const BriberyInstance& inst, Optimum opt) {
  Solution sol;
  if (opt.cost <= inst.budget) {
    sol.feasible = true;
    sol.min_cost = opt.cost;
    sol.shifts = std::move(opt.shifts);
  }
  return sol;
}

}  // namespace dsb::detail
