#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dsb/instance.hpp"
#include "dsb/rules.hpp"

namespace dsb {

// True iff `shifts` is affordable and dethrones the despised candidate.
// Positionally infeasible shifts price to infinity and so report false.
inline bool verify(const BriberyInstance& inst, const RuleSpec& rule,
                   const ShiftVector& shifts) {
  validate_instance(inst);
  validate_rule(rule, inst.election.num_candidates());
  if (shifts.size() != inst.prices.size())
    throw InputError("shift vector length does not match voter count");
  for (int v = 0; v < inst.election.num_voters(); ++v)
    if (shifts[v] < 0 || shifts[v] > max_shift(inst.election, v, inst.despised))
      return false;
  if (total_cost(inst.prices, inst.election, inst.despised, shifts) > inst.budget)
    return false;
  Election after = apply_shifts(inst.election, inst.despised, shifts);
  return !is_unique_winner(after, rule, inst.despised);
}

namespace detail {

struct BruteForceState {
  const BriberyInstance* inst;
  const RuleSpec* rule;
  std::uint64_t node_cap;
  std::uint64_t nodes = 0;
  std::vector<std::vector<int>> options;  // per-voter candidate shift amounts
  ShiftVector current;
  Cost current_cost = Cost(0);
  Cost best = Cost::infinity();
  ShiftVector best_shifts;

  void dfs(int v) {
    if (++nodes > node_cap)
      throw ResourceError("brute force exceeded node cap",
                          best.is_finite() ? std::optional<std::uint64_t>(best.value())
                                           : std::nullopt);
    if (current_cost > inst->budget || current_cost >= best) return;
    const int n = inst->election.num_voters();
    if (v == n) {
      Election after = apply_shifts(inst->election, inst->despised, current);
      if (!is_unique_winner(after, *rule, inst->despised)) {
        best = current_cost;
        best_shifts = current;
      }
      return;
    }
    const int ms = max_shift(inst->election, v, inst->despised);
    for (int s : options[v]) {
      Cost c = inst->prices[v].price(s, ms);
      if (c.is_infinite()) continue;
      current[v] = s;
      current_cost += c;
      dfs(v + 1);
      current_cost = Cost(current_cost.value() - c.value());
      current[v] = 0;
    }
  }
};

}  // namespace detail

// Exhaustive ground truth: enumerates per-voter shift amounts, pruned by
// running cost against the budget and the best solution so far. With `prune`
// on (the default), per-voter amounts are thinned to shift 0 plus the largest
// amount at each distinct finite price; a longer shift at equal price only
// pushes the despised candidate further down, which never hurts dethroning
// under any shipped rule, so the optimum cost is unchanged.
inline Solution brute_force(const BriberyInstance& inst, const RuleSpec& rule,
                            std::uint64_t node_cap = 10'000'000, bool prune = true) {
  validate_instance(inst);
  validate_rule(rule, inst.election.num_candidates());
  detail::BruteForceState st;
  st.inst = &inst;
  st.rule = &rule;
  st.node_cap = node_cap;
  const int n = inst.election.num_voters();
  st.options.resize(n);
  for (int v = 0; v < n; ++v) {
    const int ms = max_shift(inst.election, v, inst.despised);
    std::vector<int>& opts = st.options[v];
    opts.push_back(0);
    if (!prune) {
      for (int s = 1; s <= ms; ++s)
        if (inst.prices[v].price(s, ms).is_finite()) opts.push_back(s);
      continue;
    }
    for (int s = 1; s <= ms; ++s) {
      Cost c = inst.prices[v].price(s, ms);
      if (c.is_infinite()) continue;
      // keep only the largest amount per price level
      if (s == ms || inst.prices[v].price(s + 1, ms) != c) opts.push_back(s);
    }
  }
  st.current.assign(n, 0);
  st.dfs(0);
  Solution sol;
  if (st.best.is_finite()) {
    sol.feasible = true;
    sol.min_cost = st.best;
    sol.shifts = std::move(st.best_shifts);
  }
  return sol;
}

}  // namespace dsb
