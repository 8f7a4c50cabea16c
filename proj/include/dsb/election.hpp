#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dsb/errors.hpp"

namespace dsb {

// Positions are 1-based everywhere: 1 = most preferred, m = last.

// A complete strict-order preference profile. Candidates are identified by
// name at the boundary and by dense index (0..m-1) internally; voters are a
// list, so duplicate orders are distinct voters. Immutable once built.
class Election {
 public:
  // rankings[v] must be a permutation of 0..m-1, best to worst.
  Election(std::vector<std::string> candidate_names,
           std::vector<std::vector<int>> rankings)
      : names_(std::move(candidate_names)), rankings_(std::move(rankings)) {
    const int m = static_cast<int>(names_.size());
    if (m < 1) throw InputError("election needs at least one candidate");
    if (rankings_.empty()) throw InputError("election needs at least one voter");
    for (int c = 0; c < m; ++c) {
      if (names_[c].empty()) throw InputError("empty candidate name");
      if (!index_.emplace(names_[c], c).second)
        throw InputError("duplicate candidate name '" + names_[c] + "'");
    }
    positions_.resize(rankings_.size());
    for (std::size_t v = 0; v < rankings_.size(); ++v) {
      const auto& r = rankings_[v];
      if (static_cast<int>(r.size()) != m)
        throw InputError("voter " + std::to_string(v) + " ranks " +
                         std::to_string(r.size()) + " of " + std::to_string(m) +
                         " candidates");
      std::vector<int>& pos = positions_[v];
      pos.assign(m, 0);
      for (int p = 0; p < m; ++p) {
        int c = r[p];
        if (c < 0 || c >= m || pos[c] != 0)
          throw InputError("voter " + std::to_string(v) +
                           " is not a permutation of the candidate set");
        pos[c] = p + 1;
      }
    }
  }

  int num_candidates() const { return static_cast<int>(names_.size()); }
  int num_voters() const { return static_cast<int>(rankings_.size()); }

  const std::vector<std::string>& candidate_names() const { return names_; }
  const std::string& candidate_name(int c) const {
    check_candidate(c);
    return names_[c];
  }
  int candidate_index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      throw InputError("unknown candidate '" + std::string(name) + "'");
    return it->second;
  }

  const std::vector<int>& ranking(int voter) const {
    check_voter(voter);
    return rankings_[voter];
  }
  // 1-based rank of `candidate` in `voter`'s order.
  int position(int voter, int candidate) const {
    check_voter(voter);
    check_candidate(candidate);
    return positions_[voter][candidate];
  }
  int candidate_at(int voter, int position) const {
    check_voter(voter);
    if (position < 1 || position > num_candidates())
      throw InputError("position out of range");
    return rankings_[voter][position - 1];
  }

  friend bool operator==(const Election& a, const Election& b) {
    return a.names_ == b.names_ && a.rankings_ == b.rankings_;
  }

 private:
  void check_voter(int v) const {
    if (v < 0 || v >= num_voters())
      throw InputError("voter index " + std::to_string(v) + " out of range");
  }
  void check_candidate(int c) const {
    if (c < 0 || c >= num_candidates())
      throw InputError("candidate index " + std::to_string(c) + " out of range");
  }

  std::vector<std::string> names_;
  std::vector<std::vector<int>> rankings_;
  std::vector<std::vector<int>> positions_;  // [voter][candidate] -> 1-based
  std::unordered_map<std::string, int> index_;
};

// counts(c, c') = number of voters preferring c to c'. For c != c',
// counts(c,c') + counts(c',c) = n. Diagonal is zero.
struct PairwiseMatrix {
  int m = 0;
  std::vector<long long> counts;  // row-major m*m

  long long n(int c, int cprime) const { return counts[static_cast<std::size_t>(c) * m + cprime]; }
  long long& at(int c, int cprime) { return counts[static_cast<std::size_t>(c) * m + cprime]; }
};

inline PairwiseMatrix pairwise_matrix(const Election& e) {
  const int m = e.num_candidates();
  PairwiseMatrix pm{m, std::vector<long long>(static_cast<std::size_t>(m) * m, 0)};
  for (int v = 0; v < e.num_voters(); ++v) {
    const auto& r = e.ranking(v);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) pm.at(r[i], r[j])++;
  }
  return pm;
}

// Per-voter backward shift amounts for the despised candidate.
using ShiftVector = std::vector<int>;

// Largest legal backward shift of `candidate` in `voter`'s order.
inline int max_shift(const Election& e, int voter, int candidate) {
  return e.num_candidates() - e.position(voter, candidate);
}

// Moves `despised` back by shifts[v] positions in each vote; the candidates it
// passes each move up exactly one position, everyone else stays put.
inline Election apply_shifts(const Election& e, int despised, const ShiftVector& shifts) {
  if (static_cast<int>(shifts.size()) != e.num_voters())
    throw InputError("shift vector length does not match voter count");
  std::vector<std::vector<int>> rankings;
  rankings.reserve(shifts.size());
  for (int v = 0; v < e.num_voters(); ++v) {
    if (shifts[v] < 0) throw InputError("negative shift");
    if (shifts[v] > max_shift(e, v, despised))
      throw InputError("voter " + std::to_string(v) + ": shift of " +
                       std::to_string(shifts[v]) + " moves candidate past the last position");
    std::vector<int> r = e.ranking(v);
    int p = e.position(v, despised) - 1;  // 0-based
    r.erase(r.begin() + p);
    r.insert(r.begin() + p + shifts[v], despised);
    rankings.push_back(std::move(r));
  }
  return Election(e.candidate_names(), std::move(rankings));
}

}  // namespace dsb
