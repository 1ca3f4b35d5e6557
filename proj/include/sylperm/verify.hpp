#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sylperm/classes.hpp"
#include "sylperm/phi.hpp"
#include "sylperm/sior.hpp"

namespace sylperm {

enum class CheckMode { exhaustive, sampled };

inline constexpr std::uint64_t kDefaultSubsetBudget = 20'000'000;
inline constexpr std::size_t kMaxReportedCounterexamples = 10;

struct CheckReport {
  std::string claim;
  int p = 0;
  int k = 0;  // 0 when the claim has no k parameter
  std::string mode;
  std::uint64_t checked = 0;
  std::vector<RowSubset> counterexamples;
  std::uint64_t seed = 0;     // sampled mode only
  std::uint64_t samples = 0;  // sampled mode only

  bool passed() const { return counterexamples.empty(); }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Lexicographic combination at a given 0-based rank (combinatorial number
// system); lets workers seek into disjoint slices of the subset stream.
inline std::vector<std::uint32_t> unrank_combination(std::uint64_t rank,
                                                     std::uint32_t n,
                                                     std::uint32_t r) {
  std::vector<std::uint32_t> c(r);
  std::uint32_t start = 0;
  for (std::uint32_t pos = 0; pos < r; ++pos) {
    for (std::uint32_t v = start; v < n; ++v) {
      const std::uint64_t block = binomial(n - 1 - v, r - 1 - pos);
      if (rank < block) {
        c[pos] = v;
        start = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return c;
}

inline bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
  const std::uint32_t r = static_cast<std::uint32_t>(c.size());
  std::int64_t i = static_cast<std::int64_t>(r) - 1;
  while (i >= 0 &&
         c[static_cast<std::size_t>(i)] == n - r + static_cast<std::uint32_t>(i))
    --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (std::size_t j = static_cast<std::size_t>(i) + 1; j < r; ++j)
    c[j] = c[j - 1] + 1;
  return true;
}

inline bool has_vanishing_column(const std::vector<std::uint32_t>& rows, int p) {
  const std::size_t n = std::size_t{1} << p;
  std::vector<std::int64_t> x(n, 0);
  for (const auto v : rows) x[v] = 1;
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t block = 0; block < n; block += h << 1)
      for (std::size_t j = block; j < block + h; ++j) {
        const std::int64_t a = x[j];
        const std::int64_t b = x[j + h];
        x[j] = a + b;
        x[j + h] = a - b;
      }
  for (std::size_t t = 1; t < n; ++t)
    if (x[t] == 0) return true;
  return false;
}

// Codeword route: some g in Z_2^p has #{v in V : <g,v> = 1} == 2^{p-2}.
inline bool has_half_weight_codeword(const std::vector<std::uint32_t>& cols,
                                     int p) {
  const std::uint32_t n = std::uint32_t{1} << p;
  const std::uint32_t target = n / 4;  // 2^{p-2}
  for (std::uint32_t g = 0; g < n; ++g) {
    std::uint32_t weight = 0;
    for (const auto v : cols)
      weight += static_cast<std::uint32_t>(std::popcount(g & v) & 1);
    if (weight == target) return true;
  }
  return false;
}

inline std::vector<std::uint32_t> sample_combination(std::mt19937_64& rng,
                                                     std::uint32_t n,
                                                     std::uint32_t r) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::uint32_t{0});
  for (std::uint32_t i = 0; i < r; ++i) {
    std::uniform_int_distribution<std::uint32_t> d(i, n - 1);
    std::swap(pool[i], pool[d(rng)]);
  }
  std::vector<std::uint32_t> c(pool.begin(), pool.begin() + r);
  std::sort(c.begin(), c.end());
  return c;
}

inline RowSubset to_subset(const std::vector<std::uint32_t>& rows) {
  RowSubset alpha;
  alpha.reserve(rows.size());
  for (const auto v : rows) alpha.push_back(v + 1);
  return alpha;
}

// Runs `fails(rows)` over all C(n, r) combinations (exhaustive) or over
// `samples` seeded draws, sharded across workers. Shard results merge in
// shard order, so the report is byte-stable for a fixed configuration.
template <typename Fails>
void sweep_subsets(CheckReport& report, std::uint32_t n, std::uint32_t r,
                   CheckMode mode, std::uint64_t samples, std::uint64_t seed,
                   std::uint64_t budget, unsigned workers, Fails&& fails) {
  const std::uint64_t total =
      mode == CheckMode::exhaustive ? binomial(n, r) : samples;
  if (mode == CheckMode::exhaustive && total > budget)
    throw size_error("exhaustive sweep of " + std::to_string(total) +
                     " subsets exceeds budget " + std::to_string(budget) +
                     "; use sampled mode");
  if (workers == 0) workers = 1;
  if (static_cast<std::uint64_t>(workers) > total && total > 0)
    workers = static_cast<unsigned>(total);

  struct ShardResult {
    std::uint64_t checked = 0;
    std::vector<RowSubset> counterexamples;
  };
  std::vector<ShardResult> shards(workers);

  auto run_shard = [&](unsigned w) {
    ShardResult& out = shards[w];
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    if (mode == CheckMode::exhaustive) {
      if (lo >= hi) return;
      auto rows = unrank_combination(lo, n, r);
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        ++out.checked;
        if (fails(rows)) {
          out.counterexamples.push_back(to_subset(rows));
          if (out.counterexamples.size() >= kMaxReportedCounterexamples) return;
        }
        if (idx + 1 < hi) next_combination(rows, n);
      }
    } else {
      std::mt19937_64 rng(splitmix64(seed + w));
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const auto rows = sample_combination(rng, n, r);
        ++out.checked;
        if (fails(rows)) {
          out.counterexamples.push_back(to_subset(rows));
          if (out.counterexamples.size() >= kMaxReportedCounterexamples) return;
        }
      }
    }
  };

  if (workers == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_shard, w);
    for (auto& t : threads) t.join();
  }

  for (const auto& shard : shards) {
    report.checked += shard.checked;
    for (const auto& cx : shard.counterexamples)
      if (report.counterexamples.size() < kMaxReportedCounterexamples)
        report.counterexamples.push_back(cx);
  }
}

}  // namespace detail

/// Every choice of 2^k rows of H_{2^p} leaves some column (necessarily j >= 2)
/// with vanishing restricted sum. Proven for p <= 4; open beyond.
inline CheckReport verify_lemma_vanishing(
    int p, int k, CheckMode mode = CheckMode::exhaustive,
    std::uint64_t samples = 0, std::uint64_t seed = 0,
    std::uint64_t budget = kDefaultSubsetBudget, unsigned workers = 1) {
  if (p < 2 || p > 20) throw size_error("verify_lemma_vanishing: p out of range");
  if (k < 1 || k > p - 1)
    throw std::invalid_argument("verify_lemma_vanishing: k must be in 1..p-1");
  CheckReport report;
  report.claim = "lemma-vanishing-column";
  report.p = p;
  report.k = k;
  report.mode = mode == CheckMode::exhaustive ? "exhaustive" : "sampled";
  if (mode == CheckMode::sampled) {
    report.seed = seed;
    report.samples = samples;
  }
  const std::uint32_t n = std::uint32_t{1} << p;
  const std::uint32_t r = std::uint32_t{1} << k;
  detail::sweep_subsets(report, n, r, mode, samples, seed, budget, workers,
                        [p](const std::vector<std::uint32_t>& rows) {
                          return !detail::has_vanishing_column(rows, p);
                        });
  return report;
}

/// Every p x 2^{p-1} generator matrix with distinct binary columns spans a
/// code containing a codeword of weight exactly 2^{p-2}. Checked through the
/// codeword weights and cross-validated against the vanishing-column route
/// (the weight-w codeword for g is column g with restricted sum 2^{p-1}-2w).
inline CheckReport verify_codeword_proposition(
    int p, CheckMode mode = CheckMode::exhaustive, std::uint64_t samples = 0,
    std::uint64_t seed = 0, std::uint64_t budget = kDefaultSubsetBudget,
    unsigned workers = 1) {
  if (p < 2 || p > 20)
    throw size_error("verify_codeword_proposition: p must be >= 2");
  CheckReport report;
  report.claim = "codeword-weight";
  report.p = p;
  report.k = p - 1;
  report.mode = mode == CheckMode::exhaustive ? "exhaustive" : "sampled";
  if (mode == CheckMode::sampled) {
    report.seed = seed;
    report.samples = samples;
  }
  const std::uint32_t n = std::uint32_t{1} << p;
  const std::uint32_t r = n / 2;
  detail::sweep_subsets(
      report, n, r, mode, samples, seed, budget, workers,
      [p](const std::vector<std::uint32_t>& cols) {
        const bool by_weight = detail::has_half_weight_codeword(cols, p);
        const bool by_column = detail::has_vanishing_column(cols, p);
        if (by_weight != by_column)
          throw std::logic_error(
              "codeword/vanishing-column correspondence violated");
        return !by_weight;
      });
  return report;
}

/// Phi is unchanged by every generator of P-equivalence (column permutation,
/// column complementation, row permutation). Exhaustive over all nonempty
/// subsets and all generators, or sampled transform pairs. Requires p >= 2:
/// at p = 1 complementation negates Phi.
inline CheckReport verify_invariance_suite(int p,
                                           CheckMode mode = CheckMode::exhaustive,
                                           std::uint64_t samples = 0,
                                           std::uint64_t seed = 0,
                                           std::uint64_t budget = kDefaultSubsetBudget) {
  if (p < 2 || p > kCanonicalWidthLimit)
    throw size_error("verify_invariance_suite: p must be in 2.." +
                     std::to_string(kCanonicalWidthLimit));
  CheckReport report;
  report.claim = "phi-invariance";
  report.p = p;
  report.mode = mode == CheckMode::exhaustive ? "exhaustive" : "sampled";

  std::vector<POperation> generators;
  for (int k = 1; k <= p; ++k) generators.push_back(ColumnComplement{k});
  {
    std::vector<int> sigma(static_cast<std::size_t>(p));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      generators.push_back(ColumnPermutation{sigma});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  const std::uint32_t n = std::uint32_t{1} << p;
  if (mode == CheckMode::exhaustive) {
    if (n >= 63)
      throw size_error("exhaustive invariance sweep infeasible at this p; use sampled mode");
    const std::uint64_t work =
        ((std::uint64_t{1} << n) - 1) * generators.size();
    if (work > budget)
      throw size_error("exhaustive invariance sweep of " +
                       std::to_string(work) +
                       " checks exceeds budget; use sampled mode");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      RowSubset alpha;
      for (std::uint32_t i = 0; i < n; ++i)
        if (mask >> i & 1u) alpha.push_back(i + 1);
      const SiorMatrix m = sior_from_subset(alpha, p);
      std::vector<int> reversed(m.rows.size());
      std::iota(reversed.rbegin(), reversed.rend(), 1);
      bool ok = verify_phi_invariance(m, {RowPermutation{reversed}});
      for (const auto& g : generators)
        ok = ok && verify_phi_invariance(m, {g});
      ++report.checked;
      if (!ok && report.counterexamples.size() < kMaxReportedCounterexamples)
        report.counterexamples.push_back(alpha);
    }
  } else {
    report.seed = seed;
    report.samples = samples;
    std::mt19937_64 rng(detail::splitmix64(seed));
    for (std::uint64_t it = 0; it < samples; ++it) {
      std::uniform_int_distribution<std::uint32_t> size_dist(1, n);
      const std::uint32_t r = size_dist(rng);
      const auto rows = detail::sample_combination(rng, n, r);
      const SiorMatrix m{p, rows};
      std::uniform_int_distribution<int> len_dist(1, 10);
      std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
      std::vector<POperation> ops;
      const int len = len_dist(rng);
      for (int t = 0; t < len; ++t) ops.push_back(generators[pick(rng)]);
      ++report.checked;
      if (!verify_phi_invariance(m, ops) &&
          report.counterexamples.size() < kMaxReportedCounterexamples)
        report.counterexamples.push_back(detail::to_subset(rows));
    }
  }
  return report;
}

}  // namespace sylperm
