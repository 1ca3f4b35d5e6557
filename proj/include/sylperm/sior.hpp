#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "sylperm/hadamard.hpp"
#include "sylperm/matrix.hpp"

namespace sylperm {

/// Strictly increasing sequence of 1-based row indices from {1..2^p};
/// identifies a row subset of H_{2^p}.
using RowSubset = std::vector<std::uint32_t>;

/// r x p (0,1)-matrix in strictly increasing order by row. Row l is stored as
/// the value of g_{i_l}; column k (1-based, leftmost first) is bit p-k.
struct SiorMatrix {
  int cols = 0;                     // p
  std::vector<std::uint32_t> rows;  // strictly increasing p-bit values

  friend bool operator==(const SiorMatrix&, const SiorMatrix&) = default;
  friend auto operator<=>(const SiorMatrix&, const SiorMatrix&) = default;
};

inline constexpr int kCanonicalWidthLimit = 6;  // 2^p * p! transform guard

inline void validate_sior(const SiorMatrix& m) {
  if (m.cols < 1 || m.cols > 31)
    throw size_error("sior: column count out of range");
  const std::uint32_t n = std::uint32_t{1} << m.cols;
  if (m.rows.empty()) throw std::invalid_argument("sior: no rows");
  for (std::size_t l = 0; l < m.rows.size(); ++l) {
    if (m.rows[l] >= n) throw dimension_error("sior: row value exceeds width");
    if (l > 0 && m.rows[l - 1] >= m.rows[l])
      throw std::invalid_argument("sior: rows not strictly increasing");
  }
}

inline void validate_subset(const RowSubset& alpha, int p) {
  if (p < 1 || p > 31) throw size_error("row subset: p out of range");
  if (alpha.empty()) throw std::invalid_argument("row subset: empty");
  const std::uint32_t n = std::uint32_t{1} << p;
  for (std::size_t l = 0; l < alpha.size(); ++l) {
    if (alpha[l] < 1 || alpha[l] > n)
      throw dimension_error("row subset: index outside {1..2^p}");
    if (l > 0 && alpha[l - 1] >= alpha[l])
      throw std::invalid_argument("row subset: indices not strictly increasing");
  }
}

inline SiorMatrix sior_from_subset(const RowSubset& alpha, int p) {
  validate_subset(alpha, p);
  SiorMatrix m{p, {}};
  m.rows.reserve(alpha.size());
  for (const auto i : alpha) m.rows.push_back(i - 1);
  return m;
}

inline RowSubset subset_from_sior(const SiorMatrix& m) {
  validate_sior(m);
  RowSubset alpha;
  alpha.reserve(m.rows.size());
  for (const auto v : m.rows) alpha.push_back(v + 1);
  return alpha;
}

namespace detail {

inline SiorMatrix resorted(int p, std::vector<std::uint32_t> rows) {
  std::sort(rows.begin(), rows.end());
  return SiorMatrix{p, std::move(rows)};
}

}  // namespace detail

/// Flip every entry of column k (1-based), then re-sort rows ascending.
inline SiorMatrix complement_column(const SiorMatrix& m, int k) {
  validate_sior(m);
  if (k < 1 || k > m.cols)
    throw dimension_error("complement_column: column out of range");
  const std::uint32_t bit = std::uint32_t{1} << (m.cols - k);
  std::vector<std::uint32_t> rows = m.rows;
  for (auto& v : rows) v ^= bit;
  return detail::resorted(m.cols, std::move(rows));
}

/// Result column j is source column sigma[j-1] (sigma a permutation of 1..p);
/// rows are re-sorted ascending.
inline SiorMatrix permute_columns(const SiorMatrix& m,
                                  const std::vector<int>& sigma) {
  validate_sior(m);
  if (static_cast<int>(sigma.size()) != m.cols)
    throw dimension_error("permute_columns: permutation length mismatch");
  std::vector<bool> seen(sigma.size(), false);
  for (const int s : sigma) {
    if (s < 1 || s > m.cols || seen[static_cast<std::size_t>(s - 1)])
      throw std::invalid_argument("permute_columns: not a permutation of 1..p");
    seen[static_cast<std::size_t>(s - 1)] = true;
  }
  std::vector<std::uint32_t> rows;
  rows.reserve(m.rows.size());
  const int p = m.cols;
  for (const auto v : m.rows) {
    std::uint32_t w = 0;
    for (int j = 1; j <= p; ++j)
      if (v >> (p - sigma[static_cast<std::size_t>(j - 1)]) & 1u)
        w |= std::uint32_t{1} << (p - j);
    rows.push_back(w);
  }
  return detail::resorted(p, std::move(rows));
}

/// Row permutation followed by the SIOR re-sort; the identity on the stored
/// form, kept so operation sequences can include it.
inline SiorMatrix permute_rows_resorted(const SiorMatrix& m,
                                        const std::vector<int>& pi) {
  validate_sior(m);
  if (pi.size() != m.rows.size())
    throw dimension_error("permute_rows_resorted: permutation length mismatch");
  std::vector<bool> seen(pi.size(), false);
  std::vector<std::uint32_t> rows(m.rows.size());
  for (std::size_t l = 0; l < pi.size(); ++l) {
    const int t = pi[l];
    if (t < 1 || t > static_cast<int>(pi.size()) ||
        seen[static_cast<std::size_t>(t - 1)])
      throw std::invalid_argument("permute_rows_resorted: not a permutation");
    seen[static_cast<std::size_t>(t - 1)] = true;
    rows[l] = m.rows[static_cast<std::size_t>(t - 1)];
  }
  return detail::resorted(m.cols, std::move(rows));
}

struct ColumnComplement {
  int column = 1;
};
struct ColumnPermutation {
  std::vector<int> perm;
};
struct RowPermutation {
  std::vector<int> perm;
};
using POperation = std::variant<ColumnComplement, ColumnPermutation, RowPermutation>;

inline SiorMatrix apply_operation(const SiorMatrix& m, const POperation& op) {
  return std::visit(
      [&](const auto& o) -> SiorMatrix {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ColumnComplement>)
          return complement_column(m, o.column);
        else if constexpr (std::is_same_v<T, ColumnPermutation>)
          return permute_columns(m, o.perm);
        else
          return permute_rows_resorted(m, o.perm);
      },
      op);
}

/// Canonical-form machinery for one column width. Precomputes, for every
/// column permutation, the table mapping a p-bit row value to its permuted
/// value, so canonicalizing a matrix is table lookups, XORs and sorts.
class Canonicalizer {
 public:
  explicit Canonicalizer(int p) : p_(p) {
    if (p < 1) throw size_error("canonical form: p must be >= 1");
    if (p > kCanonicalWidthLimit)
      throw size_error("canonical form: p > " +
                       std::to_string(kCanonicalWidthLimit) +
                       " exceeds the 2^p * p! transform guard");
    n_ = std::uint32_t{1} << p;
    std::vector<int> sigma(static_cast<std::size_t>(p));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      std::vector<std::uint32_t> table(n_);
      for (std::uint32_t v = 0; v < n_; ++v) {
        std::uint32_t w = 0;
        for (int j = 1; j <= p; ++j)
          if (v >> (p - sigma[static_cast<std::size_t>(j - 1)]) & 1u)
            w |= std::uint32_t{1} << (p - j);
        table[v] = w;
      }
      tables_.push_back(std::move(table));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  int width() const { return p_; }

  // Lexicographic minimum of the sorted row list over all column permutations
  // and complementation masks. A minimal candidate must contain the zero row,
  // so only masks equal to one of the permuted row values are scanned; the
  // minimum over all 2^p masks is unchanged.
  std::vector<std::uint32_t> canonical_rows(
      const std::vector<std::uint32_t>& rows) const {
    std::vector<std::uint32_t> permuted(rows.size());
    std::vector<std::uint32_t> cand(rows.size());
    std::vector<std::uint32_t> best;
    for (const auto& table : tables_) {
      for (std::size_t l = 0; l < rows.size(); ++l) permuted[l] = table[rows[l]];
      for (const auto mask : permuted) {
        for (std::size_t l = 0; l < rows.size(); ++l) cand[l] = permuted[l] ^ mask;
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) best = cand;
      }
    }
    return best;
  }

 private:
  int p_;
  std::uint32_t n_ = 0;
  std::vector<std::vector<std::uint32_t>> tables_;
};

inline SiorMatrix canonical_form(const SiorMatrix& m) {
  validate_sior(m);
  const Canonicalizer canon(m.cols);
  return SiorMatrix{m.cols, canon.canonical_rows(m.rows)};
}

inline bool are_p_equivalent(const SiorMatrix& a, const SiorMatrix& b) {
  validate_sior(a);
  validate_sior(b);
  if (a.cols != b.cols || a.rows.size() != b.rows.size())
    throw dimension_error("are_p_equivalent: shape mismatch");
  const Canonicalizer canon(a.cols);
  return canon.canonical_rows(a.rows) == canon.canonical_rows(b.rows);
}

/// Rows as bitstrings, column 1 leftmost, joined by '|'.
inline std::string sior_to_string(const SiorMatrix& m) {
  std::string s;
  for (std::size_t l = 0; l < m.rows.size(); ++l) {
    if (l != 0) s.push_back('|');
    s += element_bits(GroupElement{m.rows[l], m.cols});
  }
  return s;
}

}  // namespace sylperm
