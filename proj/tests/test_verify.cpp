#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "sylperm/verify.hpp"

using namespace sylperm;

TEST_CASE("vanishing-column lemma holds exhaustively for p=3 and p=4") {
  for (int k = 1; k <= 2; ++k) {
    const CheckReport rep = verify_lemma_vanishing(3, k);
    CHECK(rep.passed());
    CHECK(rep.checked == binomial(8, 1u << k));
    CHECK(rep.mode == "exhaustive");
  }
  for (int k = 1; k <= 3; ++k) {
    const CheckReport rep = verify_lemma_vanishing(4, k);
    CHECK(rep.passed());
    CHECK(rep.checked == binomial(16, 1u << k));
  }
}

TEST_CASE("lemma sweep is identical across worker counts") {
  const CheckReport one = verify_lemma_vanishing(4, 3, CheckMode::exhaustive,
                                                 0, 0, kDefaultSubsetBudget, 1);
  const CheckReport four = verify_lemma_vanishing(4, 3, CheckMode::exhaustive,
                                                  0, 0, kDefaultSubsetBudget, 4);
  CHECK(one.checked == four.checked);
  CHECK(one.counterexamples == four.counterexamples);
}

TEST_CASE("exhaustive refusal above budget, sampled path works") {
  CHECK_THROWS_AS(verify_lemma_vanishing(5, 4, CheckMode::exhaustive, 0, 0,
                                         /*budget=*/1000),
                  size_error);
  const CheckReport rep = verify_lemma_vanishing(
      5, 4, CheckMode::sampled, /*samples=*/2000, /*seed=*/42);
  CHECK(rep.checked == 2000);
  CHECK(rep.mode == "sampled");
  CHECK(rep.seed == 42);
  // open problem beyond p=4: the report is well-formed either way
  const CheckReport again = verify_lemma_vanishing(
      5, 4, CheckMode::sampled, /*samples=*/2000, /*seed=*/42);
  CHECK(rep.counterexamples == again.counterexamples);
  CHECK(rep.checked == again.checked);
}

TEST_CASE("counterexamples surface through the sweep plumbing") {
  // fabricated failing predicate; the real claims all pass at desk scale
  CheckReport rep;
  detail::sweep_subsets(rep, 8, 2, CheckMode::exhaustive, 0, 0, 1000, 2,
                        [](const std::vector<std::uint32_t>& rows) {
                          return rows[0] == 0;  // "fails" for 7 subsets
                        });
  CHECK(rep.counterexamples.size() == 7);
  CHECK(rep.counterexamples.front() == RowSubset{1, 2});
}

TEST_CASE("codeword proposition holds exhaustively for p=2,3,4") {
  const CheckReport p2 = verify_codeword_proposition(2);
  CHECK(p2.passed());
  CHECK(p2.checked == 6);  // C(4,2)
  const CheckReport p3 = verify_codeword_proposition(3);
  CHECK(p3.passed());
  CHECK(p3.checked == 70);  // C(8,4)
  const CheckReport p4 = verify_codeword_proposition(4);
  CHECK(p4.passed());
  CHECK(p4.checked == 12870);  // C(16,8)
}

TEST_CASE("codeword and vanishing-column routes coincide generator by generator") {
  // the sweep cross-validates internally and throws on mismatch; also check
  // the correspondence directly at p=3: restricted sum = 2^{p-1} - 2 * weight
  detail::for_each_combination(8, 4, [&](const std::vector<std::uint32_t>& cols) {
    const auto sums = [&] {
      std::vector<std::int64_t> x(8, 0);
      for (const auto v : cols) x[v] = 1;
      for (std::size_t h = 1; h < 8; h <<= 1)
        for (std::size_t block = 0; block < 8; block += h << 1)
          for (std::size_t j = block; j < block + h; ++j) {
            const auto a = x[j], b = x[j + h];
            x[j] = a + b;
            x[j + h] = a - b;
          }
      return x;
    }();
    for (std::uint32_t g = 0; g < 8; ++g) {
      std::int64_t weight = 0;
      for (const auto v : cols) weight += std::popcount(g & v) & 1;
      CHECK(sums[g] == 4 - 2 * weight);
    }
  });
}

TEST_CASE("phi invariance suite") {
  const CheckReport p3 = verify_invariance_suite(3);
  CHECK(p3.passed());
  CHECK(p3.checked == 255);

  const CheckReport p4 = verify_invariance_suite(4, CheckMode::sampled,
                                                 /*samples=*/10000, /*seed=*/7);
  CHECK(p4.passed());
  CHECK(p4.checked == 10000);

  CHECK_THROWS_AS(verify_invariance_suite(1), size_error);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(verify_lemma_vanishing(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma_vanishing(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify_codeword_proposition(1), size_error);
}
