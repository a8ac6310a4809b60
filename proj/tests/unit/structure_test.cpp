#include <gtest/gtest.h>

#include "families.hpp"
#include "naive.hpp"
#include "shadowlab/canonical.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/shadow.hpp"
#include "shadowlab/shift.hpp"
#include "shadowlab/structure.hpp"
#include "shadowlab/verify/generate.hpp"

using namespace shadowlab;
using testing_support::fam;
using testing_support::ks;

namespace {

struct Point {
  int n, k, t;
};

// Shifted t-intersecting corpus over every generator profile.
std::vector<std::pair<Point, Family>> shifted_corpus(std::size_t per_point) {
  const std::vector<Point> points{{7, 3, 1}, {8, 4, 2}, {10, 4, 1}, {10, 5, 2}, {11, 5, 3}, {12, 6, 2}};
  std::vector<std::pair<Point, Family>> out;
  for (const Point& p : points) {
    for (std::uint64_t seed = 0; seed < per_point; ++seed) {
      out.emplace_back(p, verify::random_shifted_t_intersecting(p.n, p.k, p.t, seed,
                                                                verify::profile_for_seed(seed)));
    }
  }
  return out;
}

}  // namespace

TEST(Intersecting, Examples) {
  EXPECT_TRUE(is_t_intersecting(fam(2, {{1, 2}, {1, 3}, {2, 3}}), 1));
  EXPECT_FALSE(is_t_intersecting(fam(2, {{1, 2}, {3, 4}}), 1));
  EXPECT_TRUE(is_t_intersecting(frankl_family(6, 3, 1, 1), 1));
  EXPECT_EQ(frankl_family(6, 3, 1, 1).size(), 10U);
  EXPECT_TRUE(is_t_intersecting(Family(3), 2));
}

TEST(Pseudo, Examples) {
  EXPECT_TRUE(is_pseudo_t_intersecting(fam(3, {{2, 3, 4}}), 2));
  EXPECT_FALSE(is_pseudo_t_intersecting(fam(3, {{3, 4, 5}}), 2));
  EXPECT_EQ(width(full_star(8, 4, 2), 2), 0);
  EXPECT_EQ(width(frankl_family(7, 3, 1, 1), 1), 1);
  EXPECT_EQ(width(Family(3), 1), 0);
  EXPECT_THROW(width(fam(3, {{3, 4, 5}}), 2), DomainError);
}

TEST(Pseudo, ShiftedIntersectingFamiliesArePseudo) {
  for (const auto& [p, f] : shifted_corpus(40)) {
    ASSERT_TRUE(is_pseudo_t_intersecting(f, p.t));
    const int w = width(f, p.t);
    EXPECT_GE(w, 0);
    EXPECT_LE(w, p.k - p.t);
  }
}

TEST(Pseudo, OuterPartHasSmallerWidth) {
  for (const auto& [p, g] : shifted_corpus(40)) {
    const Family outer = g.filter([&](KSet m) { return !m.subset_of(KSet::prefix(2 * p.k - p.t)); });
    const int w = width(g, p.t);
    EXPECT_LE(width(outer, p.t), p.k - p.t - 1);
    if (w == p.k - p.t && p.k - p.t >= 2) {
      ASSERT_TRUE(is_pseudo_t_intersecting(outer, p.t + 1));
      EXPECT_LE(width(outer, p.t + 1), p.k - p.t - 2);
    }
  }
}

TEST(Height, Examples) {
  EXPECT_EQ(height(ks({1, 2, 5, 6}), 2, 2), 2);
  EXPECT_EQ(height(ks({1, 2, 4, 7}), 2, 1), 1);
  EXPECT_EQ(height(ks({1, 2, 3, 4, 5, 6}), 2, 2), 2);
  EXPECT_THROW(height(ks({3, 4, 5}), 2, 1), DomainError);
}

TEST(Tail, Examples) {
  EXPECT_EQ(tail(ks({1, 2, 4, 7}), 2, 1), ks({7}));
  EXPECT_EQ(tail(ks({1, 2, 3}), 2, 1), KSet{});
  EXPECT_EQ(tail(ks({1, 2, 5, 6}), 2, 2), KSet{});
}

TEST(Tail, SizeRule) {
  for (const auto& [p, f] : shifted_corpus(30)) {
    const int w = width(f, p.t);
    for (KSet m : f) {
      const int h = height(m, p.t, w);
      const int size = tail(m, p.t, w).size();
      if (h < w) {
        EXPECT_EQ(size, p.k - p.t - h);
      } else {
        EXPECT_LE(size, p.k - p.t - w);
      }
    }
  }
}

TEST(TailPartition, Examples) {
  const TailPartition a0 = tail_partition(full_star(6, 3, 2), 2);
  EXPECT_EQ(a0.width, 0);
  EXPECT_EQ(a0.entries.size(), 4U);
  EXPECT_EQ(tail_partition(fam(3, {{1, 2, 5}}), 2).entries.size(), 1U);
}

TEST(TailPartition, PartitionsAndShadowsAreDisjoint) {
  for (const auto& [p, f] : shifted_corpus(40)) {
    const TailPartition part = tail_partition(f, p.t);
    EXPECT_EQ(part.total_size(), f.size());
    for (const auto& [t_set, members] : part.entries) {
      for (KSet m : members) EXPECT_EQ(tail(m, p.t, part.width), t_set);
    }
    for (int j = 1; j <= p.t && j < p.k; ++j) {
      const auto pieces = per_tail_restricted_shadows(part, p.k, j);
      std::size_t sum = 0;
      Family joined(p.k - j);
      for (const auto& [t_set, piece] : pieces) {
        sum += piece.size();
        joined = family_union(joined, piece);
      }
      EXPECT_EQ(joined.size(), sum);
      const Family restricted = tail_restricted_shadow(f, p.t, j);
      EXPECT_EQ(restricted, joined);
      EXPECT_TRUE(is_subfamily(restricted, shadow(f, j)));
    }
  }
}

// Restricted shadow sets of a member below full width sit exactly on its
// own prefix level and below every higher one.
TEST(TailPartition, RestrictedShadowPrefixCounts) {
  for (const auto& [p, f] : shifted_corpus(30)) {
    const int w = width(f, p.t);
    for (int j = 1; j <= p.t && j < p.k; ++j) {
      for (KSet m : f) {
        const int hf = height(m, p.t, w);
        if (hf >= w) continue;
        for (KSet g : restricted_shadow_of(m, tail(m, p.t, w), j)) {
          EXPECT_EQ(prefix_intersection_size(g, p.t + 2 * hf), p.t - j + hf);
          for (int h = hf + 1; h <= w; ++h) EXPECT_LT(prefix_intersection_size(g, p.t + 2 * h), p.t - j + h);
        }
      }
    }
  }
}

TEST(RestrictedShadow, TailExamples) {
  // width 1 and every member inside [4]: all tails are empty
  EXPECT_EQ(tail_restricted_shadow(enumerate_ksubsets(4, 3), 2, 1), enumerate_ksubsets(4, 2));
  const Family expected = fam(3, {{2, 4, 7}, {1, 4, 7}, {1, 2, 7}});
  EXPECT_EQ(tail(ks({1, 2, 4, 7}), 2, 1), ks({7}));
  EXPECT_EQ(restricted_shadow_of(ks({1, 2, 4, 7}), ks({7}), 1), expected);
  const Family f = fam(4, {{1, 2, 4, 7}, {2, 3, 4, 5}});
  EXPECT_EQ(width(f, 2), 1);
  EXPECT_TRUE(is_subfamily(expected, tail_restricted_shadow(f, 2, 1)));
  EXPECT_THROW(tail_restricted_shadow(f, 2, 3), ContractViolation);
}

TEST(RestrictedShadow, PrefixExamples) {
  EXPECT_EQ(prefix_restricted_shadow(fam(4, {{1, 2, 3, 9}}), 4, 1), fam(3, {{2, 3, 9}, {1, 3, 9}, {1, 2, 9}}));
  EXPECT_TRUE(prefix_restricted_shadow(fam(3, {{5, 6, 7}}), 4, 1).empty());
}

TEST(RestrictedShadow, PrefixLevelsAreDisjoint) {
  for (const auto& [p, f] : shifted_corpus(20)) {
    const int m = p.t + 2;
    for (int j = 1; j < p.k; ++j) {
      std::map<int, std::vector<KSet>> by_level;
      for (KSet member : f) by_level[prefix_intersection_size(member, m)].push_back(member);
      std::size_t sum = 0;
      for (auto& [level, members] : by_level) sum += prefix_restricted_shadow(Family(p.k, members), m, j).size();
      EXPECT_EQ(sum, prefix_restricted_shadow(f, m, j).size());
    }
  }
}

TEST(Star, Examples) {
  EXPECT_TRUE(is_t_star(full_star(7, 3, 2), 2));
  EXPECT_FALSE(is_t_star(fam(2, {{1, 2}, {1, 3}, {2, 3}}), 1));
  EXPECT_TRUE(is_t_star(fam(3, {{1, 2, 3}}), 2));
}

TEST(Semistar, Examples) {
  const Family both = family_union(frankl_family(8, 4, 2, 0), frankl_family(8, 4, 2, 1));
  EXPECT_TRUE(is_semistar(both, 2));
  EXPECT_EQ(find_semistar_center(frankl_family(8, 4, 2, 1), 2), KSet::prefix(3));
  EXPECT_TRUE(is_semistar(full_star(8, 4, 2), 2));
  EXPECT_FALSE(is_semistar(fam(3, {{1, 2, 3}, {4, 5, 6}}), 2));
}

TEST(Base, Examples) {
  const Family inside = fam(3, {{1, 2, 3}, {1, 2, 4}});
  const BaseDecomposition b = base_decomposition(inside, 3, 2);
  EXPECT_EQ(b.levels.size(), 1U);
  EXPECT_EQ(b.levels.at(3), inside);

  const BaseDecomposition a0 = base_decomposition(full_star(8, 3, 1), 3, 1);
  EXPECT_EQ(a0.count(1), 1U);
  EXPECT_EQ(a0.count(2), 4U);
  EXPECT_EQ(a0.count(3), 6U);
  EXPECT_EQ(a0.count(0), 0U);
}

TEST(Base, PropertiesOnShiftedCorpus) {
  for (const auto& [p, f] : shifted_corpus(40)) {
    const BaseDecomposition b = base_decomposition(f, p.k, p.t);
    BigInt bound = 0;
    for (int ell = 0; ell <= p.k; ++ell) {
      const std::size_t c = b.count(ell);
      if (ell < p.t) { EXPECT_EQ(c, 0U); }
      EXPECT_LE(BigInt(c), binomial(2 * p.k - p.t, ell - p.t));
      bound += BigInt(c) * binomial(p.n - 2 * p.k + p.t, p.k - ell);
    }
    EXPECT_LE(BigInt(f.size()), bound);
    if (b.count(p.t) == 1) { EXPECT_TRUE(is_t_star(f, p.t)); }
  }
}

TEST(NextLevel, Examples) {
  const NextLevelReport star = classify_next_level(full_star(8, 3, 1), 3, 1);
  EXPECT_FALSE(star.a3_in_base);
  EXPECT_TRUE(star.consecutive);
  EXPECT_EQ(star.s, 4U);

  const NextLevelReport first = classify_next_level(frankl_family(8, 3, 1, 1), 3, 1);
  EXPECT_TRUE(first.a3_in_base);
  EXPECT_TRUE(first.contained_in_first_frankl);

  const NextLevelReport layer = classify_next_level(enumerate_ksubsets(5, 3), 3, 1);
  EXPECT_EQ(layer.s, 0U);
  EXPECT_TRUE(layer.consecutive);

  EXPECT_THROW(classify_next_level(fam(2, {{2, 3}}), 2, 1), ContractViolation);
}

TEST(NextLevel, ClaimsHoldOnShiftedCorpus) {
  for (const auto& [p, f] : shifted_corpus(40)) {
    const NextLevelReport r = classify_next_level(f, p.k, p.t);
    if (!r.a3_in_base) { EXPECT_TRUE(r.consecutive); }
    else { EXPECT_TRUE(r.contained_in_first_frankl); }
  }
}
