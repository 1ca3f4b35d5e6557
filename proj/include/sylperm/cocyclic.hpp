#pragma once

#include <cstdint>
#include <vector>

#include "sylperm/classes.hpp"
#include "sylperm/int128.hpp"
#include "sylperm/opcount.hpp"
#include "sylperm/permanent.hpp"
#include "sylperm/phi.hpp"

namespace sylperm {

struct RankTerm {
  int r = 0;
  bool skipped = false;     // rank dropped by the vanishing-column rule
  Int128 coefficient = 0;   // (-1)^r r, or (-1)^r (2r - n) in half mode
  Int128 class_sum = 0;     // sum over classes of size * phi
  Int128 term = 0;          // coefficient * class_sum
  std::uint64_t class_count = 0;
};

struct CocyclicResult {
  Int128 value = 0;
  OpCount preprocess;   // step 1: class enumeration (no counted arithmetic)
  OpCount evaluation;   // step 2: phi of representatives + formula evaluation
  std::uint64_t canonicalizations = 0;  // step-1 work, outside the convention
  std::vector<RankTerm> terms;

  OpCount total_ops() const { return preprocess + evaluation; }
  PermanentResult to_permanent() const { return {value, total_ops()}; }

  std::vector<int> ranks_evaluated() const {
    std::vector<int> out;
    for (const auto& t : terms)
      if (!t.skipped) out.push_back(t.r);
    return out;
  }
  std::vector<int> ranks_skipped() const {
    std::vector<int> out;
    for (const auto& t : terms)
      if (t.skipped) out.push_back(t.r);
    return out;
  }
};

/// Fills the phi cache of every class from its canonical representative.
/// Valid for p >= 2, where Phi is constant on P-orbits.
inline void attach_phi(ClassDistribution& dist) {
  for (auto& c : dist.classes)
    c.phi = phi_wht(subset_from_sior(c.canonical), dist.p);
}

namespace detail {

inline bool is_power_of_two_rank(int r) { return r >= 2 && (r & (r - 1)) == 0; }

// Sum over Q_{r,n} of Phi, one subset at a time. Only used at p = 1, where
// column complementation negates Phi (2^{p-1} = 1 columns flip sign), so the
// class collapse does not apply.
inline Int128 rank_sum_by_subset(int r, int p, OpCount& ops) {
  Int128 sum = 0;
  bool first = true;
  for_each_combination(std::uint32_t{1} << p, static_cast<std::uint32_t>(r),
                       [&](const std::vector<std::uint32_t>& rows) {
                         RowSubset alpha;
                         alpha.reserve(rows.size());
                         for (const auto v : rows) alpha.push_back(v + 1);
                         const Int128 f = phi_counted(alpha, p, ops);
                         if (first) {
                           sum = f;
                           first = false;
                         } else {
                           sum = checked_add(sum, f);
                           ++ops.additions;
                         }
                       });
  return sum;
}

// Sum over classes of size * phi, evaluating Phi once per representative.
inline Int128 rank_sum_by_class(int r, int p, OpCount& ops,
                                std::uint64_t& canonicalizations,
                                std::uint64_t& class_count) {
  ClassDistribution dist = enumerate_classes(r, p);
  canonicalizations += binomial(std::uint32_t{1} << p,
                                static_cast<std::uint32_t>(r));
  class_count = dist.classes.size();
  Int128 sum = 0;
  bool first = true;
  for (const auto& c : dist.classes) {
    const Int128 f = phi_counted(subset_from_sior(c.canonical), p, ops);
    const Int128 weighted = checked_mul(static_cast<Int128>(c.size), f);
    ++ops.multiplications;
    if (first) {
      sum = weighted;
      first = false;
    } else {
      sum = checked_add(sum, weighted);
      ++ops.additions;
    }
  }
  return sum;
}

inline CocyclicResult evaluate_rank_sums(int p, bool half, bool skip_powers) {
  const int n = 1 << p;
  const int r_max = half ? n / 2 : n;
  CocyclicResult res;
  Int128 total = 0;
  bool first_term = true;
  for (int r = 1; r <= r_max; ++r) {
    RankTerm term;
    term.r = r;
    const Int128 magnitude = half ? Int128{2 * r - n} : Int128{r};
    term.coefficient = (r & 1) ? -magnitude : magnitude;
    if (skip_powers && is_power_of_two_rank(r)) {
      term.skipped = true;
      res.terms.push_back(term);
      continue;
    }
    if (p == 1)
      term.class_sum = rank_sum_by_subset(r, p, res.evaluation);
    else
      term.class_sum = rank_sum_by_class(r, p, res.evaluation,
                                         res.canonicalizations,
                                         term.class_count);
    term.term = checked_mul(term.coefficient, term.class_sum);
    ++res.evaluation.multiplications;
    if (first_term) {
      total = term.term;
      first_term = false;
    } else {
      total = checked_add(total, term.term);
      ++res.evaluation.additions;
    }
    res.terms.push_back(term);
  }
  res.value = total;
  return res;
}

}  // namespace detail

/// Permanent of H_{2^p} by the class-collapsed Ryser rewrite over all ranks:
/// sum_{r=1}^{n} (-1)^r r sum_i size[X_i^r] Phi(X_i^r).
inline CocyclicResult per_cocyclic_full(int p) {
  if (p < 1) throw size_error("per_cocyclic_full: p must be >= 1");
  return detail::evaluate_rank_sums(p, /*half=*/false, /*skip_powers=*/false);
}

/// Half-range variant, sum_{r=1}^{n/2} (-1)^r (2r-n) sum_i size Phi, with
/// ranks r = 2^k dropped where the vanishing-column rule is proven (p <= 4, or
/// any p when assume_vanishing_lemma is set).
inline CocyclicResult per_cocyclic_half(int p,
                                        bool assume_vanishing_lemma = false) {
  if (p < 1) throw size_error("per_cocyclic_half: p must be >= 1");
  const bool skip = p <= 4 || assume_vanishing_lemma;
  return detail::evaluate_rank_sums(p, /*half=*/true, skip);
}

}  // namespace sylperm
