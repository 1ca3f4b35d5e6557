#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "sylperm/classes.hpp"
#include "sylperm/cocyclic.hpp"

using namespace sylperm;

TEST_CASE("binomial") {
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(16, 8) == 12870);
  CHECK(binomial(32, 16) == 601080390);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(200, 100) == ~std::uint64_t{0});  // saturated
}

TEST_CASE("r=3, p=3 distribution matches the three known classes") {
  ClassDistribution dist = enumerate_classes(3, 3);
  attach_phi(dist);
  REQUIRE(dist.classes.size() == 3);
  CHECK(dist.total_size() == 56);

  std::multiset<std::uint64_t> sizes;
  for (const auto& c : dist.classes) sizes.insert(c.size);
  CHECK(sizes == std::multiset<std::uint64_t>{8, 24, 24});

  // the displayed representatives land in classes of the stated sizes
  const auto size_of = [&](const SiorMatrix& rep) -> std::uint64_t {
    const SiorMatrix c = canonical_form(rep);
    for (const auto& cls : dist.classes)
      if (cls.canonical == c) return cls.size;
    return 0;
  };
  CHECK(size_of(SiorMatrix{3, {0, 1, 2}}) == 24);  // 000|001|010
  CHECK(size_of(SiorMatrix{3, {0, 1, 6}}) == 24);  // 000|001|110
  CHECK(size_of(SiorMatrix{3, {0, 3, 5}}) == 8);   // 000|011|101

  for (const auto& c : dist.classes) CHECK(*c.phi == 3);
}

TEST_CASE("r=1, p=3 is a single orbit of size 8") {
  ClassDistribution dist = enumerate_classes(1, 3);
  attach_phi(dist);
  REQUIRE(dist.classes.size() == 1);
  CHECK(dist.classes[0].size == 8);
  CHECK(dist.classes[0].canonical == SiorMatrix{3, {0}});
  CHECK(*dist.classes[0].phi == 1);
}

TEST_CASE("partition identities for every r at p = 2, 3") {
  for (int p = 2; p <= 3; ++p) {
    const std::uint32_t n = std::uint32_t{1} << p;
    std::uint64_t pfact = 1;
    for (int i = 2; i <= p; ++i) pfact *= static_cast<std::uint64_t>(i);
    const std::uint64_t group_order = n * pfact;
    for (int r = 1; r <= static_cast<int>(n); ++r) {
      const ClassDistribution dist = enumerate_classes(r, p);
      const std::uint64_t expected = binomial(n, static_cast<unsigned>(r));
      CHECK(dist.total_size() == expected);
      CHECK(dist.classes.size() >=
            (expected + group_order - 1) / group_order);  // ceil lower bound
      for (const auto& c : dist.classes) {
        CHECK(c.size <= group_order);
        CHECK(group_order % c.size == 0);  // orbit size divides |Z_2^p x S_p|
      }
    }
  }
}

TEST_CASE("pairwise scan produces the same partition") {
  for (int p = 2; p <= 3; ++p)
    for (int r = 1; r <= 3; ++r) {
      const ClassDistribution fast = enumerate_classes(r, p);
      const ClassDistribution slow = enumerate_classes_pairwise(r, p);
      REQUIRE(fast.classes.size() == slow.classes.size());
      for (std::size_t i = 0; i < fast.classes.size(); ++i) {
        CHECK(fast.classes[i].canonical == slow.classes[i].canonical);
        CHECK(fast.classes[i].size == slow.classes[i].size);
      }
    }
}

TEST_CASE("output is independent of visiting order") {
  // group a shuffled stream of subsets by canonical form and compare
  std::mt19937_64 rng(8080);
  const Canonicalizer canon(3);
  std::vector<std::vector<std::uint32_t>> subsets;
  detail::for_each_combination(8, 3, [&](const std::vector<std::uint32_t>& rows) {
    subsets.push_back(rows);
  });
  std::shuffle(subsets.begin(), subsets.end(), rng);
  std::map<std::vector<std::uint32_t>, std::uint64_t> grouped;
  for (const auto& rows : subsets) ++grouped[canon.canonical_rows(rows)];

  const ClassDistribution dist = enumerate_classes(3, 3);
  REQUIRE(grouped.size() == dist.classes.size());
  std::size_t i = 0;
  for (const auto& [rows, size] : grouped) {
    CHECK(dist.classes[i].canonical.rows == rows);
    CHECK(dist.classes[i].size == size);
    ++i;
  }
}

TEST_CASE("determinism across repeated runs") {
  const ClassDistribution a = enumerate_classes(4, 3);
  const ClassDistribution b = enumerate_classes(4, 3);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].canonical == b.classes[i].canonical);
    CHECK(a.classes[i].size == b.classes[i].size);
  }
}

TEST_CASE("csv serialization") {
  ClassDistribution dist = enumerate_classes(3, 3);
  attach_phi(dist);
  const std::string csv = classes_to_csv(dist);
  CHECK(csv ==
        "r,p,representative,size,phi\n"
        "3,3,000|001|010,24,3\n"
        "3,3,000|001|110,24,3\n"
        "3,3,000|011|101,8,3\n");
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(enumerate_classes(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_classes(9, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_classes(1, 7), size_error);
}
