#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sylperm/int128.hpp"
#include "sylperm/sior.hpp"

namespace sylperm {

struct EquivClass {
  SiorMatrix canonical;
  std::uint64_t size = 0;
  std::optional<Int128> phi;  // cached by the cocyclic layer
};

struct ClassDistribution {
  int r = 0;
  int p = 0;
  std::vector<EquivClass> classes;  // sorted by canonical form

  std::uint64_t total_size() const {
    std::uint64_t t = 0;
    for (const auto& c : classes) t += c.size;
    return t;
  }
};

/// Exact C(n, k), saturating at UINT64_MAX so oversized sweep estimates
/// still trip the budget guard instead of wrapping.
inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  constexpr unsigned __int128 kCap = ~std::uint64_t{0};
  for (unsigned i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // running value is C(n-k+i, i), exact
    if (result > kCap) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(result);
}

namespace detail {

template <typename Visit>
void for_each_combination(std::uint32_t n, std::uint32_t r, Visit&& visit) {
  std::vector<std::uint32_t> c(r);
  std::iota(c.begin(), c.end(), std::uint32_t{0});
  while (true) {
    visit(static_cast<const std::vector<std::uint32_t>&>(c));
    std::int64_t i = static_cast<std::int64_t>(r) - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] ==
                         n - r + static_cast<std::uint32_t>(i))
      --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < r; ++j)
      c[j] = c[j - 1] + 1;
  }
}

}  // namespace detail

/// Partition of all C(2^p, r) SIOR matrices into P-equivalence classes,
/// keyed by canonical form. Output order is the canonical-form order, so the
/// result does not depend on the visiting order.
inline ClassDistribution enumerate_classes(int r, int p) {
  const Canonicalizer canon(p);
  const std::uint32_t n = std::uint32_t{1} << p;
  if (r < 1 || static_cast<std::uint32_t>(r) > n)
    throw std::invalid_argument("enumerate_classes: r outside {1..2^p}");
  std::map<std::vector<std::uint32_t>, std::uint64_t> counts;
  detail::for_each_combination(
      n, static_cast<std::uint32_t>(r),
      [&](const std::vector<std::uint32_t>& rows) {
        ++counts[canon.canonical_rows(rows)];
      });
  ClassDistribution dist{r, p, {}};
  dist.classes.reserve(counts.size());
  for (auto& [rows, size] : counts)
    dist.classes.push_back(EquivClass{SiorMatrix{p, rows}, size, std::nullopt});
  return dist;
}

/// Literal form of the class search: scan the known representatives with a
/// pairwise P-equivalence test for every SIOR matrix. Same partition as
/// enumerate_classes; kept as the slow differential-testing path.
inline ClassDistribution enumerate_classes_pairwise(int r, int p) {
  const Canonicalizer canon(p);
  const std::uint32_t n = std::uint32_t{1} << p;
  if (r < 1 || static_cast<std::uint32_t>(r) > n)
    throw std::invalid_argument("enumerate_classes_pairwise: r outside {1..2^p}");
  std::vector<SiorMatrix> reps;
  std::vector<std::uint64_t> sizes;
  detail::for_each_combination(
      n, static_cast<std::uint32_t>(r),
      [&](const std::vector<std::uint32_t>& rows) {
        const SiorMatrix x{p, rows};
        for (std::size_t i = 0; i < reps.size(); ++i) {
          if (canon.canonical_rows(reps[i].rows) == canon.canonical_rows(x.rows)) {
            ++sizes[i];
            return;
          }
        }
        reps.push_back(x);
        sizes.push_back(1);
      });
  ClassDistribution dist{r, p, {}};
  for (std::size_t i = 0; i < reps.size(); ++i)
    dist.classes.push_back(EquivClass{
        SiorMatrix{p, canon.canonical_rows(reps[i].rows)}, sizes[i], std::nullopt});
  std::sort(dist.classes.begin(), dist.classes.end(),
            [](const EquivClass& a, const EquivClass& b) {
              return a.canonical < b.canonical;
            });
  return dist;
}

inline std::string classes_to_csv(const ClassDistribution& dist) {
  std::ostringstream os;
  os << "r,p,representative,size,phi\n";
  for (const auto& c : dist.classes) {
    os << dist.r << ',' << dist.p << ',' << sior_to_string(c.canonical) << ','
       << c.size << ',';
    if (c.phi) os << to_string(*c.phi);
    os << '\n';
  }
  return os.str();
}

}  // namespace sylperm
