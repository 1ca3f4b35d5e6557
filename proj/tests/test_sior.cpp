#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sylperm/classes.hpp"
#include "sylperm/sior.hpp"

using namespace sylperm;

namespace {

// Independent oracle: the P-orbit of a row multiset as the BFS closure under
// single-column complementations and adjacent-column swaps (which generate
// all column permutations). No canonical-form machinery involved.
std::set<std::vector<std::uint32_t>> orbit_bfs(const SiorMatrix& m) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> frontier{m.rows};
  seen.insert(m.rows);
  const int p = m.cols;
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& rows : frontier) {
      const SiorMatrix cur{p, rows};
      std::vector<SiorMatrix> images;
      for (int k = 1; k <= p; ++k) images.push_back(complement_column(cur, k));
      for (int k = 1; k < p; ++k) {
        std::vector<int> sigma(static_cast<std::size_t>(p));
        std::iota(sigma.begin(), sigma.end(), 1);
        std::swap(sigma[static_cast<std::size_t>(k - 1)],
                  sigma[static_cast<std::size_t>(k)]);
        images.push_back(permute_columns(cur, sigma));
      }
      for (const auto& img : images)
        if (seen.insert(img.rows).second) next.push_back(img.rows);
    }
    frontier = std::move(next);
  }
  return seen;
}

SiorMatrix sior(std::initializer_list<std::uint32_t> rows, int p) {
  return SiorMatrix{p, rows};
}

}  // namespace

TEST_CASE("subset <-> SIOR bijection") {
  CHECK(sior_from_subset({1, 2, 3}, 3).rows == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(sior_from_subset({1, 2, 7}, 3).rows == std::vector<std::uint32_t>{0, 1, 6});
  CHECK(sior_to_string(sior_from_subset({1, 2, 7}, 3)) == "000|001|110");

  detail::for_each_combination(8, 3, [](const std::vector<std::uint32_t>& rows) {
    RowSubset alpha;
    for (const auto v : rows) alpha.push_back(v + 1);
    CHECK(subset_from_sior(sior_from_subset(alpha, 3)) == alpha);
  });

  CHECK_THROWS_AS(sior_from_subset({0, 1}, 3), dimension_error);
  CHECK_THROWS_AS(sior_from_subset({1, 9}, 3), dimension_error);
  CHECK_THROWS_AS(sior_from_subset({2, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(sior_from_subset({}, 3), std::invalid_argument);
}

TEST_CASE("column operations") {
  const SiorMatrix m = sior({0, 1, 2}, 3);  // 000|001|010
  CHECK(complement_column(m, 3).rows == std::vector<std::uint32_t>{0, 1, 3});
  CHECK(complement_column(sior({0}, 3), 1).rows == std::vector<std::uint32_t>{4});

  SiorMatrix all_complemented = sior({0}, 3);
  for (int k = 1; k <= 3; ++k)
    all_complemented = complement_column(all_complemented, k);
  CHECK(all_complemented.rows == std::vector<std::uint32_t>{7});

  CHECK(permute_columns(m, {1, 2, 3}) == m);
  // column permutation relabels g-values: 001 under swap(1,3) becomes 100
  CHECK(permute_columns(sior({1}, 3), {3, 2, 1}).rows ==
        std::vector<std::uint32_t>{4});
  CHECK(permute_rows_resorted(m, {3, 1, 2}) == m);

  CHECK_THROWS_AS(complement_column(m, 4), dimension_error);
  CHECK_THROWS_AS(permute_columns(m, {1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(permute_rows_resorted(m, {1, 2}), dimension_error);
}

TEST_CASE("canonical form of singletons") {
  CHECK(canonical_form(sior({1}, 3)) == sior({0}, 3));
  // every 1x3 matrix lies in one orbit of size 8
  const auto orbit = orbit_bfs(sior({1}, 3));
  CHECK(orbit.size() == 8);
  for (const auto& rows : orbit)
    CHECK(canonical_form(SiorMatrix{3, rows}) == sior({0}, 3));
}

TEST_CASE("canonical form is idempotent and orbit-constant at r=3, p=3") {
  detail::for_each_combination(8, 3, [](const std::vector<std::uint32_t>& rows) {
    const SiorMatrix m{3, rows};
    const SiorMatrix c = canonical_form(m);
    CHECK(canonical_form(c) == c);
    CHECK(orbit_bfs(m).count(c.rows) == 1);
  });
}

TEST_CASE("canonical form equals the BFS orbit minimum") {
  // independent-oracle cross-check on every r=2 and r=3 matrix at p=3
  for (std::uint32_t r : {2u, 3u})
    detail::for_each_combination(
        8, r, [](const std::vector<std::uint32_t>& rows) {
          const SiorMatrix m{3, rows};
          const auto orbit = orbit_bfs(m);
          CHECK(canonical_form(m).rows == *orbit.begin());
        });
}

TEST_CASE("the three r=3 representatives are pairwise inequivalent") {
  const SiorMatrix a = sior({0, 1, 2}, 3);  // 000|001|010
  const SiorMatrix b = sior({0, 1, 6}, 3);  // 000|001|110
  const SiorMatrix c = sior({0, 3, 5}, 3);  // 000|011|101
  CHECK(canonical_form(a) != canonical_form(b));
  CHECK(canonical_form(a) != canonical_form(c));
  CHECK(canonical_form(b) != canonical_form(c));
  CHECK_FALSE(are_p_equivalent(a, b));
  CHECK(are_p_equivalent(a, a));

  const auto oa = orbit_bfs(a), ob = orbit_bfs(b), oc = orbit_bfs(c);
  CHECK(oa.size() == 24);
  CHECK(ob.size() == 24);
  CHECK(oc.size() == 8);
  std::set<std::vector<std::uint32_t>> all;
  all.insert(oa.begin(), oa.end());
  all.insert(ob.begin(), ob.end());
  all.insert(oc.begin(), oc.end());
  CHECK(all.size() == 56);  // the orbits partition Q_{3,8}
}

TEST_CASE("closure under random operation sequences") {
  std::mt19937_64 rng(5150);
  const SiorMatrix m = sior({0, 1, 2}, 3);
  for (int trial = 0; trial < 30; ++trial) {
    SiorMatrix t = m;
    for (int step = 0; step < 10; ++step) {
      switch (rng() % 3) {
        case 0:
          t = complement_column(t, 1 + static_cast<int>(rng() % 3));
          break;
        case 1: {
          std::vector<int> sigma{1, 2, 3};
          std::shuffle(sigma.begin(), sigma.end(), rng);
          t = permute_columns(t, sigma);
          break;
        }
        default: {
          std::vector<int> pi(t.rows.size());
          std::iota(pi.begin(), pi.end(), 1);
          std::shuffle(pi.begin(), pi.end(), rng);
          t = permute_rows_resorted(t, pi);
        }
      }
    }
    CHECK(are_p_equivalent(m, t));
  }
}

TEST_CASE("canonical form is invariant under every generator, all ranks, p=3") {
  const Canonicalizer canon(3);
  for (std::uint32_t mask = 1; mask < 256; ++mask) {
    std::vector<std::uint32_t> rows;
    for (std::uint32_t i = 0; i < 8; ++i)
      if (mask >> i & 1u) rows.push_back(i);
    const SiorMatrix m{3, rows};
    const auto base = canon.canonical_rows(m.rows);
    for (int k = 1; k <= 3; ++k)
      CHECK(canon.canonical_rows(complement_column(m, k).rows) == base);
    std::vector<int> sigma{1, 2, 3};
    do {
      CHECK(canon.canonical_rows(permute_columns(m, sigma).rows) == base);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST_CASE("canonical form is invariant under generators at p=4 (randomized)") {
  std::mt19937_64 rng(31337);
  const Canonicalizer canon(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t r = 1 + static_cast<std::uint32_t>(rng() % 16);
    std::vector<std::uint32_t> pool(16);
    std::iota(pool.begin(), pool.end(), 0u);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<std::uint32_t> rows(pool.begin(), pool.begin() + r);
    std::sort(rows.begin(), rows.end());
    const SiorMatrix m{4, rows};
    const auto base = canon.canonical_rows(m.rows);

    CHECK(canon.canonical_rows(
              complement_column(m, 1 + static_cast<int>(rng() % 4)).rows) == base);
    std::vector<int> sigma{1, 2, 3, 4};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    CHECK(canon.canonical_rows(permute_columns(m, sigma).rows) == base);
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(canonical_form(SiorMatrix{7, {0}}), size_error);
  CHECK_THROWS_AS(are_p_equivalent(sior({0}, 3), sior({0, 1}, 3)),
                  dimension_error);
  CHECK_THROWS_AS(are_p_equivalent(sior({0}, 3), sior({0}, 2)),
                  dimension_error);
  CHECK_THROWS_AS(validate_sior(SiorMatrix{3, {2, 1}}), std::invalid_argument);
  CHECK_NOTHROW(Canonicalizer(6));
}
