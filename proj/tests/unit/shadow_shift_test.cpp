#include <gtest/gtest.h>

#include "families.hpp"
#include "naive.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/shadow.hpp"
#include "shadowlab/shift.hpp"
#include "shadowlab/structure.hpp"
#include "shadowlab/verify/generate.hpp"

using namespace shadowlab;
using testing_support::fam;
using testing_support::ks;

TEST(Shadow, Examples) {
  EXPECT_EQ(shadow(fam(3, {{1, 2, 3}}), 1), fam(2, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(shadow(enumerate_ksubsets(4, 3), 1), enumerate_ksubsets(4, 2));
  const Family two = shadow(fam(3, {{1, 2, 3}, {1, 2, 4}}), 1);
  EXPECT_EQ(two, fam(2, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}));
  EXPECT_EQ(two.size(), 5U);
  EXPECT_THROW(shadow(fam(3, {{1, 2, 3}}), 3), ContractViolation);
  EXPECT_TRUE(shadow(Family(3), 1).empty());
}

TEST(Shadow, SigmaExamples) {
  EXPECT_EQ(sigma(fam(2, {{1, 2}, {1, 3}, {2, 3}}), 1), fam(1, {{1}, {2}, {3}}));
  EXPECT_THROW(sigma(fam(2, {{1, 2}}), 2), ContractViolation);
  const Family empty_set = sigma(fam(3, {{1, 2, 3}}), 0);
  EXPECT_EQ(empty_set.size(), 1U);
  EXPECT_EQ(empty_set[0], KSet{});
}

TEST(Shadow, RatioExamples) {
  EXPECT_EQ(shadow_ratio(enumerate_ksubsets(4, 3), 1).to_string(), "3/2");
  EXPECT_EQ(shadow_ratio(enumerate_ksubsets(3, 2), 1).to_string(), "1");
  EXPECT_EQ(shadow_ratio(fam(3, {{1, 2, 3}}), 1).to_string(), "3");
  EXPECT_THROW(shadow_ratio(Family(3), 1), ContractViolation);
}

TEST(Shadow, BothPathsAgreeWithNaive) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int k = 2 + static_cast<int>(seed % 4);
    const int n = k + 1 + static_cast<int>(seed % 5);
    const Family f = verify::random_family(n, k, seed);
    for (int j = 1; j < k; ++j) {
      const Family a = shadow(f, j);
      EXPECT_EQ(a, shadow_by_subsets(f, j));
      EXPECT_EQ(naive::from(a), naive::shadow(naive::from(f), j));
      EXPECT_EQ(sigma(f, k - j), a);
    }
  }
}

TEST(Shadow, CompositionAndMonotonicity) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Family g = verify::random_family(8, 4, seed);
    const Family f = g.filter([&](KSet m) { return m.bits() % 3 != 0; });
    for (int a = 1; a < 4; ++a) {
      if (!f.empty()) { EXPECT_TRUE(is_subfamily(shadow(f, a), shadow(g, a))); }
      for (int b = 1; a + b < 4; ++b) EXPECT_EQ(shadow(shadow(g, a), b), shadow(g, a + b));
    }
  }
}

// Every nonempty subfamily of the full layer has ratio at least the layer's
// ratio, with equality only for the layer itself.
TEST(Shadow, LayerRatioIsMinimalExhaustively) {
  for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{4, 3}}) {
    const Family all = enumerate_ksubsets(n, k);
    for (int j = 1; j < k; ++j) {
      const ExactRatio bound(binomial(n, k - j), binomial(n, k));
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << all.size()); ++mask) {
        std::vector<KSet> members;
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (((mask >> i) & 1U) != 0) members.push_back(all[i]);
        }
        const Family f(k, members);
        const ExactRatio r = shadow_ratio(f, j);
        EXPECT_GE(r, bound);
        EXPECT_EQ(r == bound, f.size() == all.size());
      }
    }
  }
}

TEST(Shift, IsShiftedExamples) {
  EXPECT_TRUE(is_shifted(fam(2, {{1, 2}, {1, 3}})));
  EXPECT_FALSE(is_shifted(fam(2, {{2, 3}})));
  EXPECT_TRUE(is_shifted(enumerate_ksubsets(6, 3)));
  EXPECT_TRUE(is_shifted(Family(3)));
}

TEST(Shift, PairExamples) {
  EXPECT_EQ(shift_pair(fam(2, {{2, 3}}), 1, 2), fam(2, {{1, 3}}));
  EXPECT_EQ(shift_pair(fam(2, {{1, 3}, {2, 3}}), 1, 2), fam(2, {{1, 3}, {2, 3}}));
  EXPECT_EQ(shift_pair(fam(2, {{1, 2}}), 1, 2), fam(2, {{1, 2}}));
  EXPECT_THROW(shift_pair(fam(2, {{1, 2}}), 2, 2), ContractViolation);
  EXPECT_THROW(shift_pair(fam(2, {{1, 2}}), 3, 2), ContractViolation);
}

TEST(Shift, ClosureExamples) {
  EXPECT_EQ(shift_closure(fam(2, {{2, 3}, {2, 4}})), fam(2, {{1, 2}, {1, 3}}));
  const Family shifted = fam(2, {{1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(shift_closure(shifted), shifted);
}

TEST(Shift, AgreesWithNaive) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int k = 2 + static_cast<int>(seed % 3);
    const int n = k + 2 + static_cast<int>(seed % 4);
    const Family f = verify::random_family(n, k, seed);
    for (int i = 1; i < n; ++i) {
      for (int jj = i + 1; jj <= n; ++jj) {
        EXPECT_EQ(naive::from(shift_pair(f, i, jj)), naive::shift(naive::from(f), i, jj));
      }
    }
    const Family closed = shift_closure(f);
    EXPECT_EQ(naive::from(closed), naive::shift_closure(naive::from(f)));
    EXPECT_EQ(is_shifted(closed), naive::shifted(naive::from(closed)));
    EXPECT_EQ(is_shifted(f), naive::shifted(naive::from(f)));
  }
}

TEST(Shift, PairPreservesSizeIntersectionAndShrinksShadows) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int t = 1 + static_cast<int>(seed % 2);
    const int k = t + 2;
    const int n = 2 * k;
    const Family f = verify::random_t_intersecting(n, k, t, seed);
    for (int i = 1; i < n; ++i) {
      for (int jj = i + 1; jj <= n; ++jj) {
        const Family g = shift_pair(f, i, jj);
        ASSERT_EQ(g.size(), f.size());
        EXPECT_TRUE(is_t_intersecting(g, t));
        for (int ell = 0; ell < k; ++ell) EXPECT_LE(sigma(g, ell).size(), sigma(f, ell).size());
        EXPECT_LE(element_sum_potential(g), element_sum_potential(f));
      }
    }
  }
}
