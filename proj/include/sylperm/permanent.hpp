#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sylperm/hadamard.hpp"
#include "sylperm/int128.hpp"
#include "sylperm/matrix.hpp"
#include "sylperm/opcount.hpp"

namespace sylperm {

struct PermanentResult {
  Int128 value = 0;
  OpCount ops;
};

inline constexpr Eigen::Index kNaiveOrderLimit = 12;
inline constexpr Eigen::Index kRyserOrderLimit = 24;
inline constexpr Eigen::Index kGrayOrderLimit = 32;

namespace detail {

inline void require_square(const IntMatrix& a, const char* who) {
  if (a.rows() != a.cols())
    throw dimension_error(std::string(who) + ": matrix is not square");
}

// Row-major copy; the subset engines sum selected rows columnwise.
inline std::vector<std::int64_t> row_major(const IntMatrix& a) {
  const Eigen::Index n = a.rows();
  std::vector<std::int64_t> buf(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      buf[static_cast<std::size_t>(i * n + j)] = a(i, j);
  return buf;
}

}  // namespace detail

/// Permanent by the defining sum over the symmetric group.
/// Ops: n!*(n-1) multiplications, n!-1 additions.
inline PermanentResult per_naive(const IntMatrix& a) {
  detail::require_square(a, "per_naive");
  const Eigen::Index n = a.rows();
  if (n > kNaiveOrderLimit)
    throw size_error("per_naive: order " + std::to_string(n) +
                     " exceeds the n! guard (" +
                     std::to_string(kNaiveOrderLimit) +
                     "); use the ryser or gray engine");
  PermanentResult res;
  if (n == 0) {
    res.value = 1;
    return res;
  }
  std::vector<Eigen::Index> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), Eigen::Index{0});
  Int128 sum = 0;
  std::uint64_t terms = 0;
  do {
    Int128 prod = a(0, sigma[0]);
    for (Eigen::Index i = 1; i < n; ++i) {
      prod = checked_mul(prod, a(i, sigma[static_cast<std::size_t>(i)]));
      ++res.ops.multiplications;
    }
    if (terms++ == 0) {
      sum = prod;
    } else {
      sum = checked_add(sum, prod);
      ++res.ops.additions;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  res.value = sum;
  return res;
}

/// Ryser inclusion-exclusion over row subsets, enumerated in lexicographic
/// rank order (r = 1..n, subsets of each size in lexicographic order).
/// The standard global (-1)^n factor is applied; for even orders it is +1.
inline PermanentResult per_ryser(const IntMatrix& a) {
  detail::require_square(a, "per_ryser");
  const Eigen::Index n = a.rows();
  if (n > kRyserOrderLimit)
    throw size_error("per_ryser: order " + std::to_string(n) +
                     " exceeds the 2^n guard (" +
                     std::to_string(kRyserOrderLimit) +
                     "); use the gray engine");
  PermanentResult res;
  if (n == 0) {
    res.value = 1;
    return res;
  }
  const auto buf = detail::row_major(a);
  std::vector<std::int64_t> colsum(static_cast<std::size_t>(n));
  Int128 total = 0;
  std::uint64_t terms = 0;
  for (Eigen::Index r = 1; r <= n; ++r) {
    std::vector<Eigen::Index> c(static_cast<std::size_t>(r));
    std::iota(c.begin(), c.end(), Eigen::Index{0});
    const Int128 sign = (r & 1) ? -1 : 1;
    while (true) {
      std::fill(colsum.begin(), colsum.end(), std::int64_t{0});
      for (std::size_t l = 0; l < c.size(); ++l) {
        const std::int64_t* row = &buf[static_cast<std::size_t>(c[l] * n)];
        for (Eigen::Index j = 0; j < n; ++j) colsum[static_cast<std::size_t>(j)] += row[j];
        if (l != 0) res.ops.additions += static_cast<std::uint64_t>(n);
      }
      Int128 prod = colsum[0];
      for (Eigen::Index j = 1; j < n; ++j) {
        prod = checked_mul(prod, colsum[static_cast<std::size_t>(j)]);
        ++res.ops.multiplications;
      }
      if (terms++ == 0) {
        total = sign * prod;
      } else {
        total = checked_add(total, sign * prod);
        ++res.ops.additions;
      }
      // next lexicographic combination
      Eigen::Index i = r - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i) --i;
      if (i < 0) break;
      ++c[static_cast<std::size_t>(i)];
      for (Eigen::Index j = i + 1; j < r; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  res.value = (n & 1) ? -total : total;
  return res;
}

/// Ryser with column sums updated by single-row deltas along the reflected
/// Gray-code subset walk. Ops per subset step: n delta additions, n-1
/// multiplications, plus one accumulation addition per term after the first.
inline PermanentResult per_ryser_gray(const IntMatrix& a) {
  detail::require_square(a, "per_ryser_gray");
  const Eigen::Index n = a.rows();
  if (n > kGrayOrderLimit)
    throw size_error("per_ryser_gray: order " + std::to_string(n) +
                     " exceeds the 2^n guard (" +
                     std::to_string(kGrayOrderLimit) + ")");
  PermanentResult res;
  if (n == 0) {
    res.value = 1;
    return res;
  }
  const auto buf = detail::row_major(a);
  std::vector<std::int64_t> colsum(static_cast<std::size_t>(n), 0);
  Int128 total = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k != end; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const int bit = std::countr_zero(k);
    const bool added = (gray >> bit) & 1u;
    const std::int64_t* row = &buf[static_cast<std::size_t>(bit) * static_cast<std::size_t>(n)];
    if (added)
      for (Eigen::Index j = 0; j < n; ++j) colsum[static_cast<std::size_t>(j)] += row[j];
    else
      for (Eigen::Index j = 0; j < n; ++j) colsum[static_cast<std::size_t>(j)] -= row[j];
    res.ops.additions += static_cast<std::uint64_t>(n);
    Int128 prod = colsum[0];
    for (Eigen::Index j = 1; j < n; ++j) {
      prod = checked_mul(prod, colsum[static_cast<std::size_t>(j)]);
      ++res.ops.multiplications;
    }
    const bool odd = std::popcount(gray) & 1;
    if (k == 1) {
      total = odd ? -prod : prod;
    } else {
      total = checked_add(total, odd ? -prod : prod);
      ++res.ops.additions;
    }
  }
  res.value = (n & 1) ? -total : total;
  return res;
}

/// per(H_{2^n})^{2^m} * per(H_{2^m})^{2^n}: the closed form of
/// per(I x A) per(B x I) after per(I_k x A) = per(A)^k and
/// per(A x B) = per(B x A).
inline Int128 per_kronecker_product_rhs(int n, int m) {
  if (n < 1 || m < 1)
    throw size_error("per_kronecker_product_rhs: n, m must be >= 1");
  if (n > 5 || m > 5)
    throw size_error("per_kronecker_product_rhs: constituent order exceeds gray engine guard");
  const Int128 per_n = per_ryser_gray(sylvester(n)).value;
  const Int128 per_m = per_ryser_gray(sylvester(m)).value;
  return checked_mul(checked_pow(per_n, 1u << m), checked_pow(per_m, 1u << n));
}

}  // namespace sylperm
