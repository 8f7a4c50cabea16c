#pragma once

#include <algorithm>
#include <vector>

#include "dsb/solver_common.hpp"

namespace dsb {

namespace detail {

// Under k-approval the only useful action is moving d from a top-k slot to
// position k+1, promoting the candidate sitting there. For each rival c the
// voters split into V_dc (c at position k+1, d in top k), V_d (other voters
// with d in top k), and the rest; picking the cheapest a from V_dc and b from
// V_d is exchange-optimal, so enumerating (c, a, b) is exact.
inline Optimum opt_k_approval(const BriberyInstance& inst, int k) {
  const Election& e = inst.election;
  const int m = e.num_candidates();
  const int n = e.num_voters();
  const int d = inst.despised;
  if (!is_unique_winner(e, RuleSpec::k_approval(k), d)) return zero_optimum(inst);

  Optimum best;
  if (k >= m) return best;  // all candidates tie at n; d unique only when m = 1

  std::vector<long long> base(m, 0);
  for (int v = 0; v < n; ++v)
    for (int p = 1; p <= k; ++p) base[e.candidate_at(v, p)]++;

  // cost of parking d at position k+1, and who gets promoted
  std::vector<Cost> park_cost(n);
  std::vector<int> beneficiary(n, -1);
  std::vector<int> group_d;  // voters with d in top k (split per rival below)
  for (int v = 0; v < n; ++v) {
    if (e.position(v, d) > k) continue;
    park_cost[v] = inst.prices[v].price(k + 1 - e.position(v, d), max_shift(e, v, d));
    beneficiary[v] = e.candidate_at(v, k + 1);
    group_d.push_back(v);
  }

  std::vector<long long> scores(m);
  for (int c = 0; c < m; ++c) {
    if (c == d) continue;
    std::vector<int> vdc, vd;
    for (int v : group_d) (beneficiary[v] == c ? vdc : vd).push_back(v);
    auto cheaper = [&](int a, int b) {
      return park_cost[a] != park_cost[b] ? park_cost[a] < park_cost[b] : a < b;
    };
    std::sort(vdc.begin(), vdc.end(), cheaper);
    std::sort(vd.begin(), vd.end(), cheaper);

    Cost cost_a(0);
    for (std::size_t a = 0; a <= vdc.size(); ++a) {
      if (a > 0) cost_a += park_cost[vdc[a - 1]];
      if (cost_a.is_infinite() || cost_a >= best.cost) break;
      scores = base;
      scores[d] -= static_cast<long long>(a);
      scores[c] += static_cast<long long>(a);
      long long max_other = -1;
      for (int x = 0; x < m; ++x)
        if (x != d) max_other = std::max(max_other, scores[x]);
      Cost cost_ab = cost_a;
      for (std::size_t b = 0; b <= vd.size(); ++b) {
        if (b > 0) {
          int v = vd[b - 1];
          cost_ab += park_cost[v];
          scores[d]--;
          max_other = std::max(max_other, ++scores[beneficiary[v]]);
        }
        if (cost_ab.is_infinite() || cost_ab >= best.cost) break;
        if (max_other >= scores[d]) {
          best.cost = cost_ab;
          best.shifts.assign(n, 0);
          for (std::size_t i = 0; i < a; ++i)
            best.shifts[vdc[i]] = k + 1 - e.position(vdc[i], d);
          for (std::size_t i = 0; i < b; ++i)
            best.shifts[vd[i]] = k + 1 - e.position(vd[i], d);
          break;  // larger b only costs more
        }
      }
    }
  }
  return best;
}

}  // namespace detail

// Thm-style greedy for the k-approval family; exact minimum cost.
inline Solution solve_k_approval(const BriberyInstance& inst, int k) {
  validate_instance(inst);
  validate_rule(RuleSpec::k_approval(k), inst.election.num_candidates());
  return detail::finalize(inst, detail::opt_k_approval(inst, k));
}

}  // namespace dsb
