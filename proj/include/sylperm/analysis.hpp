#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylperm/cocyclic.hpp"
#include "sylperm/hadamard.hpp"
#include "sylperm/int128.hpp"
#include "sylperm/matrix.hpp"
#include "sylperm/permanent.hpp"

namespace sylperm {

/// f(n) = sum_{k>=1} floor(n / 2^k), the 2-adic valuation of n!.
inline std::uint64_t two_adic_valuation_factorial(std::uint64_t n) {
  std::uint64_t f = 0;
  while (n != 0) {
    n >>= 1;
    f += n;
  }
  return f;
}

struct DivisibilityReport {
  int p = 0;
  std::uint64_t n = 0;
  std::uint64_t f_n = 0;
  Int128 permanent = 0;
  bool divides = false;             // 2^{f(n)} | per
  bool next_power_divides = false;  // 2^{f(n)+1} | per
  bool conjecture_holds() const { return divides && !next_power_divides; }
};

/// 2^{f(n)} divides per(H_{2^p}) and 2^{f(n)+1} does not; computed from the
/// Gray-code Ryser engine.
inline DivisibilityReport check_divisibility(int p) {
  if (p < 1 || (1 << p) > kGrayOrderLimit)
    throw size_error("check_divisibility: order exceeds gray engine guard");
  DivisibilityReport rep;
  rep.p = p;
  rep.n = std::uint64_t{1} << p;
  rep.f_n = two_adic_valuation_factorial(rep.n);
  rep.permanent = per_ryser_gray(sylvester(p)).value;
  const Int128 pow_f = checked_pow(2, static_cast<unsigned>(rep.f_n));
  rep.divides = rep.permanent % pow_f == 0;
  rep.next_power_divides = rep.permanent % checked_mul(pow_f, 2) == 0;
  return rep;
}

struct InequalityReport {
  int n = 0;
  int m = 0;
  Int128 lhs = 0;  // per of the explicitly multiplied product matrix
  Int128 rhs = 0;  // per(H_{2^n})^{2^m} * per(H_{2^m})^{2^n}
  bool holds = false;
  bool identity_validated = false;  // product matrix equals H_{2^{n+m}}
};

/// per((H_{2^n} x I)(I x H_{2^m})) >= per(H_{2^n} x I) per(I x H_{2^m}),
/// with the left side evaluated on the explicitly constructed product.
inline InequalityReport check_inequality(int n, int m) {
  if (n < 1 || m < 1) throw size_error("check_inequality: n, m must be >= 1");
  if (n + m > 4)
    throw size_error("check_inequality: 2^{n+m} > 16 exceeds the desk-scale guard");
  InequalityReport rep;
  rep.n = n;
  rep.m = m;
  const IntMatrix left = kronecker(sylvester(n), identity(Eigen::Index{1} << m));
  const IntMatrix right = kronecker(identity(Eigen::Index{1} << n), sylvester(m));
  const IntMatrix product = matmul(left, right);
  rep.identity_validated = product == sylvester(n + m);
  rep.lhs = per_ryser_gray(product).value;
  rep.rhs = per_kronecker_product_rhs(n, m);
  rep.holds = rep.lhs >= rep.rhs;
  return rep;
}

struct SufficientConditionEntry {
  int k = 0;
  Int128 permanent = 0;
  bool nonzero = false;
  // chained lower bounds per(H_{2^k}) >= per(H_{2^a})^{2^b} per(H_{2^b})^{2^a}
  struct Bound {
    int a = 0;
    int b = 0;
    Int128 rhs = 0;
    bool holds = false;
  };
  std::vector<Bound> bounds;
};

/// Nonvanishing of per(H_{2^k}) for k <= max_k together with the product
/// lower bounds available at desk scale.
inline std::vector<SufficientConditionEntry> check_sufficient_condition(int max_k) {
  if (max_k < 1 || (1 << max_k) > kGrayOrderLimit)
    throw size_error("check_sufficient_condition: order exceeds gray engine guard");
  std::vector<SufficientConditionEntry> out;
  std::vector<Int128> per_by_k(static_cast<std::size_t>(max_k) + 1, 0);
  for (int k = 1; k <= max_k; ++k) {
    SufficientConditionEntry e;
    e.k = k;
    e.permanent = per_ryser_gray(sylvester(k)).value;
    per_by_k[static_cast<std::size_t>(k)] = e.permanent;
    e.nonzero = e.permanent != 0;
    for (int a = 1; a < k; ++a) {
      const int b = k - a;
      SufficientConditionEntry::Bound bound;
      bound.a = a;
      bound.b = b;
      bound.rhs = checked_mul(
          checked_pow(per_by_k[static_cast<std::size_t>(a)], 1u << b),
          checked_pow(per_by_k[static_cast<std::size_t>(b)], 1u << a));
      bound.holds = e.permanent >= bound.rhs;
      e.bounds.push_back(bound);
    }
    out.push_back(std::move(e));
  }
  return out;
}

struct ReferenceCounts {
  std::string ryser;
  std::string cocyclic;
};

/// Previously reported operation counts for context. They were produced under
/// a different, unrecoverable counting convention and are never asserted.
inline std::optional<ReferenceCounts> reference_counts(int p) {
  if (p == 2)
    return ReferenceCounts{"51 multiplications, 101 additions",
                           "9 multiplications, 4 additions"};
  if (p == 3)
    return ReferenceCounts{"9913 operations",
                           "2779 operations (step 1: 2688, step 2: 91)"};
  return std::nullopt;
}

struct OpCountReport {
  int p = 0;
  Int128 value = 0;  // agreed value from both engines
  OpCount ryser;
  OpCount cocyclic_step1;
  OpCount cocyclic_step2;
  std::uint64_t canonicalizations = 0;
  bool cocyclic_total_less = false;
  std::optional<ReferenceCounts> reference;

  OpCount cocyclic_total() const { return cocyclic_step1 + cocyclic_step2; }
};

/// Measured Ryser vs half-range cocyclic operation counts at order 2^p under
/// the fixed convention, with the published figures attached as annotations.
inline OpCountReport opcount_report(int p) {
  if (p < 1 || p > 4) throw size_error("opcount_report: p must be in 1..4");
  OpCountReport rep;
  rep.p = p;
  const PermanentResult ryser = per_ryser(sylvester(p));
  const CocyclicResult cocyclic = per_cocyclic_half(p);
  if (ryser.value != cocyclic.value)
    throw std::logic_error("opcount_report: engine values disagree");
  rep.value = ryser.value;
  rep.ryser = ryser.ops;
  rep.cocyclic_step1 = cocyclic.preprocess;
  rep.cocyclic_step2 = cocyclic.evaluation;
  rep.canonicalizations = cocyclic.canonicalizations;
  rep.cocyclic_total_less = rep.cocyclic_total().total() < rep.ryser.total();
  rep.reference = reference_counts(p);
  return rep;
}

}  // namespace sylperm
