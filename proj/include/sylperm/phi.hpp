#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sylperm/int128.hpp"
#include "sylperm/opcount.hpp"
#include "sylperm/sior.hpp"

namespace sylperm {

using PhiValue = Int128;

namespace detail {

// Restricted column sums of H_{2^p}: wht_of_subset(alpha)[t] equals
// sum_{i in alpha} h_{i, t+1}. Entry 0 is the column-1 sum, always r.
inline std::vector<std::int64_t> wht_of_subset(const RowSubset& alpha, int p) {
  const std::size_t n = std::size_t{1} << p;
  std::vector<std::int64_t> x(n, 0);
  for (const auto i : alpha) x[i - 1] = 1;
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t block = 0; block < n; block += h << 1)
      for (std::size_t j = block; j < block + h; ++j) {
        const std::int64_t a = x[j];
        const std::int64_t b = x[j + h];
        x[j] = a + b;
        x[j + h] = a - b;
      }
  return x;
}

}  // namespace detail

/// Phi(alpha) = product over columns j = 2..n of the column sum of H_{2^p}
/// restricted to rows alpha. Column 1 is excluded; its sum is |alpha|.
/// Counts (r-1) additions per column sum and n-2 multiplications.
inline PhiValue phi_counted(const RowSubset& alpha, int p, OpCount& ops) {
  validate_subset(alpha, p);
  const std::uint32_t n = std::uint32_t{1} << p;
  Int128 product = 1;
  bool first = true;
  for (std::uint32_t j = 2; j <= n; ++j) {
    std::int64_t sum = 0;
    bool first_row = true;
    for (const auto i : alpha) {
      const std::int64_t h =
          (std::popcount((i - 1) & (j - 1)) & 1) ? -1 : 1;
      sum += h;
      if (first_row)
        first_row = false;
      else
        ++ops.additions;
    }
    if (first) {
      product = sum;
      first = false;
    } else {
      product = checked_mul(product, sum);
      ++ops.multiplications;
    }
  }
  return product;
}

inline PhiValue phi(const RowSubset& alpha, int p) {
  OpCount ignored;
  return phi_counted(alpha, p, ignored);
}

/// Same contract as phi, computed through the fast Walsh-Hadamard butterfly
/// on the subset's indicator vector (n log n additions).
inline PhiValue phi_wht(const RowSubset& alpha, int p) {
  validate_subset(alpha, p);
  const auto x = detail::wht_of_subset(alpha, p);
  Int128 product = x[1];
  for (std::size_t t = 2; t < x.size(); ++t) product = checked_mul(product, x[t]);
  return product;
}

/// True iff Phi is unchanged by the composite of the given P-operations.
inline bool verify_phi_invariance(const SiorMatrix& m,
                                  const std::vector<POperation>& ops) {
  validate_sior(m);
  SiorMatrix t = m;
  for (const auto& op : ops) t = apply_operation(t, op);
  return phi_wht(subset_from_sior(m), m.cols) ==
         phi_wht(subset_from_sior(t), t.cols);
}

}  // namespace sylperm
