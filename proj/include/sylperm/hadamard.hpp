#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "sylperm/matrix.hpp"

namespace sylperm {

/// Element g_i of Z_2^p: the binary representation of i-1, written with the
/// least-significant bit as the last coordinate (g_1 = 0...0, g_2 = 0...01).
struct GroupElement {
  std::uint32_t bits = 0;
  int width = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement group_element(std::uint32_t index, int p) {
  if (p < 1 || p > 31) throw size_error("group_element: p out of range");
  if (index < 1 || index > (std::uint32_t{1} << p))
    throw dimension_error("group_element: index outside {1..2^p}");
  return GroupElement{index - 1, p};
}

inline std::uint32_t element_index(const GroupElement& g) { return g.bits + 1; }

/// Group operation of Z_2^p (coordinatewise addition mod 2).
inline GroupElement group_product(const GroupElement& a, const GroupElement& b) {
  if (a.width != b.width)
    throw dimension_error("group_product: width mismatch");
  return GroupElement{a.bits ^ b.bits, a.width};
}

inline int mod2_inner(const GroupElement& a, const GroupElement& b) {
  if (a.width != b.width) throw dimension_error("mod2_inner: width mismatch");
  return std::popcount(a.bits & b.bits) & 1;
}

/// psi(g_i, g_j) = (-1)^<g_i, g_j>; the value table of this cocycle over
/// Z_2^p is the Sylvester Hadamard matrix of order 2^p.
inline int cocycle_entry(const GroupElement& a, const GroupElement& b) {
  return mod2_inner(a, b) ? -1 : 1;
}

/// Bitstring of g with column 1 leftmost (most-significant coordinate first).
inline std::string element_bits(const GroupElement& g) {
  std::string s(static_cast<std::size_t>(g.width), '0');
  for (int k = 0; k < g.width; ++k)
    if (g.bits >> (g.width - 1 - k) & 1u) s[static_cast<std::size_t>(k)] = '1';
  return s;
}

/// Sylvester Hadamard matrix H_{2^p}: entry (i,j) = (-1)^<g_i,g_j>, equal to
/// the p-fold Kronecker power of H_2. Normalized by construction.
inline IntMatrix sylvester(int p, Eigen::Index order_limit = kDefaultOrderLimit) {
  if (p < 1) throw size_error("sylvester: p must be >= 1");
  if (p > 30 || (Eigen::Index{1} << p) > order_limit)
    throw size_error("sylvester: order 2^" + std::to_string(p) +
                     " exceeds limit " + std::to_string(order_limit));
  const Eigen::Index n = Eigen::Index{1} << p;
  IntMatrix h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      h(i, j) = (std::popcount(static_cast<std::uint64_t>(i) &
                               static_cast<std::uint64_t>(j)) &
                 1)
                    ? -1
                    : 1;
  return h;
}

}  // namespace sylperm
