#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dsb/election.hpp"
#include "dsb/errors.hpp"
#include "dsb/rational.hpp"

namespace dsb {

// Rule selector. Scoring carries its vector, KApproval its threshold,
// Copeland its exact tie value alpha in [0,1].
struct RuleSpec {
  enum class Kind {
    kScoring,
    kKApproval,
    kBorda,
    kBucklin,
    kSimplifiedBucklin,
    kCopeland,
    kMaximin,
  };

  Kind kind = Kind::kBorda;
  std::vector<long long> scoring_vector;  // kScoring only
  int k = 1;                              // kKApproval only
  Rational alpha = Rational(1, 2);        // kCopeland only

  static RuleSpec scoring(std::vector<long long> vec) {
    RuleSpec r;
    r.kind = Kind::kScoring;
    r.scoring_vector = std::move(vec);
    return r;
  }
  static RuleSpec k_approval(int k) {
    RuleSpec r;
    r.kind = Kind::kKApproval;
    r.k = k;
    return r;
  }
  static RuleSpec borda() { return RuleSpec{}; }
  static RuleSpec bucklin() {
    RuleSpec r;
    r.kind = Kind::kBucklin;
    return r;
  }
  static RuleSpec simplified_bucklin() {
    RuleSpec r;
    r.kind = Kind::kSimplifiedBucklin;
    return r;
  }
  static RuleSpec copeland(Rational alpha) {
    RuleSpec r;
    r.kind = Kind::kCopeland;
    r.alpha = alpha;
    return r;
  }
  static RuleSpec maximin() {
    RuleSpec r;
    r.kind = Kind::kMaximin;
    return r;
  }
};

inline std::vector<long long> borda_vector(int m) {
  std::vector<long long> v(m);
  for (int i = 0; i < m; ++i) v[i] = m - 1 - i;
  return v;
}

inline void validate_scoring_vector(const std::vector<long long>& vec, int m) {
  if (static_cast<int>(vec.size()) != m)
    throw InputError("scoring vector has " + std::to_string(vec.size()) +
                     " entries for " + std::to_string(m) + " candidates");
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (vec[i] < 0) throw InputError("scoring vector entries must be nonnegative");
    if (i > 0 && vec[i] > vec[i - 1])
      throw InputError("scoring vector must be nonincreasing");
  }
}

inline void validate_rule(const RuleSpec& rule, int m) {
  switch (rule.kind) {
    case RuleSpec::Kind::kScoring:
      validate_scoring_vector(rule.scoring_vector, m);
      break;
    case RuleSpec::Kind::kKApproval:
      if (rule.k < 1 || rule.k > m)
        throw InputError("k-approval threshold out of range [1, m]");
      break;
    case RuleSpec::Kind::kCopeland:
      if (rule.alpha < Rational(0) || rule.alpha > Rational(1))
        throw InputError("copeland alpha must lie in [0, 1]");
      break;
    case RuleSpec::Kind::kMaximin:
      if (m < 2) throw InputError("maximin needs at least two candidates");
      break;
    default:
      break;
  }
}

inline long long scoring_score(const Election& e, const std::vector<long long>& vec,
                               int candidate) {
  validate_scoring_vector(vec, e.num_candidates());
  long long total = 0;
  for (int v = 0; v < e.num_voters(); ++v) total += vec[e.position(v, candidate) - 1];
  return total;
}

// Number of voters ranking `candidate` in their top k.
inline int k_approval_score(const Election& e, int k, int candidate) {
  if (k < 1 || k > e.num_candidates())
    throw InputError("k-approval threshold out of range [1, m]");
  int score = 0;
  for (int v = 0; v < e.num_voters(); ++v)
    if (e.position(v, candidate) <= k) ++score;
  return score;
}

// Strict majority threshold floor(n/2) + 1.
inline int majority_threshold(int n) { return n / 2 + 1; }

// Smallest round l such that some candidate's l-approval score reaches the
// strict majority threshold. l = m always qualifies.
inline int bucklin_round(const Election& e) {
  const int m = e.num_candidates();
  const int maj = majority_threshold(e.num_voters());
  std::vector<int> count(m, 0);
  for (int round = 1; round <= m; ++round) {
    int best = 0;
    for (int v = 0; v < e.num_voters(); ++v)
      best = std::max(best, ++count[e.candidate_at(v, round)]);
    if (best >= maj) return round;
  }
  return m;  // unreachable: at round m every candidate scores n
}

namespace detail {

// Copeland scores scaled by alpha's denominator: den*wins + num*ties. Exact
// integer comparisons, same order as the rational scores.
inline std::vector<long long> copeland_scaled_scores(const PairwiseMatrix& pm,
                                                     const Rational& alpha) {
  std::vector<long long> scores(pm.m, 0);
  for (int c = 0; c < pm.m; ++c) {
    long long wins = 0, ties = 0;
    for (int o = 0; o < pm.m; ++o) {
      if (o == c) continue;
      if (pm.n(c, o) > pm.n(o, c))
        ++wins;
      else if (pm.n(c, o) == pm.n(o, c))
        ++ties;
    }
    scores[c] = alpha.den() * wins + alpha.num() * ties;
  }
  return scores;
}

inline std::vector<long long> maximin_scores(const PairwiseMatrix& pm) {
  std::vector<long long> scores(pm.m);
  for (int c = 0; c < pm.m; ++c) {
    long long best = -1;
    for (int o = 0; o < pm.m; ++o) {
      if (o == c) continue;
      long long x = pm.n(c, o);
      if (best < 0 || x < best) best = x;
    }
    scores[c] = best;
  }
  return scores;
}

inline std::vector<int> argmax_set(const std::vector<long long>& scores) {
  long long best = *std::max_element(scores.begin(), scores.end());
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(scores.size()); ++c)
    if (scores[c] == best) out.push_back(c);
  return out;
}

}  // namespace detail

inline Rational copeland_score(const Election& e, const Rational& alpha, int candidate) {
  if (alpha < Rational(0) || alpha > Rational(1))
    throw InputError("copeland alpha must lie in [0, 1]");
  PairwiseMatrix pm = pairwise_matrix(e);
  long long wins = 0, ties = 0;
  for (int o = 0; o < pm.m; ++o) {
    if (o == candidate) continue;
    if (pm.n(candidate, o) > pm.n(o, candidate))
      ++wins;
    else if (pm.n(candidate, o) == pm.n(o, candidate))
      ++ties;
  }
  return Rational(wins) + alpha * Rational(ties);
}

inline long long maximin_score(const Election& e, int candidate) {
  if (e.num_candidates() < 2)
    throw InputError("maximin needs at least two candidates");
  PairwiseMatrix pm = pairwise_matrix(e);
  return detail::maximin_scores(pm)[candidate];
}

// Tied winner set, sorted by candidate index. Bucklin takes the score
// maximizers at the winning round; Simplified Bucklin takes everyone at or
// above the majority threshold in that round.
inline std::vector<int> winners(const Election& e, const RuleSpec& rule) {
  const int m = e.num_candidates();
  const int n = e.num_voters();
  validate_rule(rule, m);
  switch (rule.kind) {
    case RuleSpec::Kind::kScoring:
    case RuleSpec::Kind::kBorda: {
      const std::vector<long long> vec = rule.kind == RuleSpec::Kind::kBorda
                                             ? borda_vector(m)
                                             : rule.scoring_vector;
      std::vector<long long> scores(m, 0);
      for (int v = 0; v < n; ++v) {
        const auto& r = e.ranking(v);
        for (int p = 0; p < m; ++p) scores[r[p]] += vec[p];
      }
      return detail::argmax_set(scores);
    }
    case RuleSpec::Kind::kKApproval: {
      std::vector<long long> scores(m, 0);
      for (int v = 0; v < n; ++v) {
        const auto& r = e.ranking(v);
        for (int p = 0; p < rule.k; ++p) scores[r[p]]++;
      }
      return detail::argmax_set(scores);
    }
    case RuleSpec::Kind::kBucklin:
    case RuleSpec::Kind::kSimplifiedBucklin: {
      const int round = bucklin_round(e);
      std::vector<long long> scores(m, 0);
      for (int v = 0; v < n; ++v)
        for (int p = 1; p <= round; ++p) scores[e.candidate_at(v, p)]++;
      if (rule.kind == RuleSpec::Kind::kBucklin) return detail::argmax_set(scores);
      const int maj = majority_threshold(n);
      std::vector<int> out;
      for (int c = 0; c < m; ++c)
        if (scores[c] >= maj) out.push_back(c);
      return out;
    }
    case RuleSpec::Kind::kCopeland:
      return detail::argmax_set(detail::copeland_scaled_scores(pairwise_matrix(e), rule.alpha));
    case RuleSpec::Kind::kMaximin:
      return detail::argmax_set(detail::maximin_scores(pairwise_matrix(e)));
  }
  throw InputError("unknown rule");
}

inline bool is_unique_winner(const Election& e, const RuleSpec& rule, int candidate) {
  std::vector<int> w = winners(e, rule);
  return w.size() == 1 && w[0] == candidate;
}

}  // namespace dsb
