#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "families.hpp"
#include "naive.hpp"
#include "shadowlab/canonical.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/shadow.hpp"
#include "shadowlab/shift.hpp"
#include "shadowlab/structure.hpp"
#include "shadowlab/verify/generate.hpp"
#include "shadowlab/verify/oracle.hpp"
#include "shadowlab/verify/parallel.hpp"

using namespace shadowlab;
using namespace shadowlab::verify;
using testing_support::fam;

#ifndef SHADOWLAB_GOLDEN_DIR
#error "SHADOWLAB_GOLDEN_DIR must point at the golden files"
#endif

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(Oracle, CliqueCountsMatchMatrixSweep) {
  for (auto [n, k, t] : {std::array{4, 2, 1}, std::array{5, 2, 1}, std::array{4, 3, 2}, std::array{5, 3, 2},
                         std::array{6, 2, 1}, std::array{5, 4, 3}}) {
    std::uint64_t visited = 0;
    naive::Fam last;
    bool first = true;
    enumerate_t_intersecting(n, k, t, [&](const Family& f) {
      if (first) { EXPECT_TRUE(f.empty()); }
      first = false;
      EXPECT_TRUE(naive::t_intersecting(naive::from(f), t));
      ++visited;
    });
    EXPECT_EQ(visited, naive::clique_count(n, k, t)) << n << " " << k << " " << t;
  }
}

TEST(Oracle, SmallCaseCounts) {
  std::map<std::size_t, std::size_t> by_size;
  enumerate_t_intersecting(4, 2, 1, [&](const Family& f) { ++by_size[f.size()]; });
  EXPECT_EQ(by_size, (std::map<std::size_t, std::size_t>{{0, 1}, {1, 6}, {2, 12}, {3, 8}}));

  const auto maximal = maximal_t_intersecting(4, 2, 1);
  EXPECT_EQ(maximal.size(), 8U);
  std::size_t triangles = 0;
  for (const Family& f : maximal) {
    EXPECT_EQ(f.size(), 3U);
    if (!is_t_star(f, 1)) ++triangles;
  }
  EXPECT_EQ(triangles, 4U);
}

TEST(Oracle, TooLargeIsCapacityError) {
  EXPECT_THROW(CompatibilityGraph(8, 4, 1), CapacityError);
  EXPECT_THROW(min_shadow_table(7, 3, 1, 1), CapacityError);
  try {
    CompatibilityGraph(8, 4, 1);
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("70"), std::string::npos);
  }
}

TEST(Oracle, SelfIntersectionRule) {
  // k < t: no set is t-intersecting with itself, only the empty family
  std::size_t visited = 0;
  enumerate_t_intersecting(4, 2, 3, [&](const Family&) { ++visited; });
  EXPECT_EQ(visited, 1U);
  // k = t: only singletons
  visited = 0;
  enumerate_t_intersecting(4, 2, 2, [&](const Family& f) {
    EXPECT_LE(f.size(), 1U);
    ++visited;
  });
  EXPECT_EQ(visited, 7U);
}

TEST(Oracle, MaximalCliquesAreMaximal) {
  for (auto [n, k, t] : {std::array{5, 2, 1}, std::array{6, 3, 2}, std::array{6, 3, 1}}) {
    const auto all = enumerate_ksubsets(n, k);
    for (const Family& f : maximal_t_intersecting(n, k, t)) {
      ASSERT_TRUE(is_t_intersecting(f, t));
      for (KSet extra : all) {
        if (f.contains(extra)) continue;
        EXPECT_FALSE(is_t_intersecting(family_union(f, Family(k, {extra})), t));
      }
    }
  }
}

TEST(Oracle, MinShadowExample) {
  const MinShadowTable table = min_shadow_table(4, 2, 1, 1);
  ASSERT_EQ(table.rows.size(), 3U);
  EXPECT_EQ(table.rows[0].min_shadow, 2U);
  EXPECT_EQ(table.rows[1].min_shadow, 3U);
  EXPECT_EQ(table.rows[2].min_shadow, 3U);
  for (const MinShadowRow& row : table.rows) {
    EXPECT_EQ(row.witness.size(), row.size);
    EXPECT_EQ(shadow(row.witness, 1).size(), row.min_shadow);
    EXPECT_TRUE(is_t_intersecting(row.witness, 1));
  }
}

TEST(Oracle, MinShadowMatchesBruteForce) {
  for (auto [n, k, t, j] : {std::array{4, 2, 1, 1}, std::array{5, 2, 1, 1}, std::array{5, 3, 1, 2},
                            std::array{5, 3, 2, 1}, std::array{4, 3, 1, 1}}) {
    const MinShadowTable table = min_shadow_table(n, k, t, j);
    std::map<std::size_t, std::size_t> got;
    for (const MinShadowRow& row : table.rows) {
      got[row.size] = row.min_shadow;
      EXPECT_EQ(shadow(row.witness, j).size(), row.min_shadow);
    }
    EXPECT_EQ(got, naive::min_shadow(n, k, t, j)) << n << " " << k << " " << t << " " << j;
  }
}

TEST(Oracle, LayerRowIsAttainedByLayers) {
  // at |F| = C(2k - t, k) the minimum is C(2k - t, k - j)
  for (auto [n, k, t, j] : {std::array{4, 2, 1, 1}, std::array{5, 2, 1, 1}, std::array{6, 3, 2, 1}}) {
    const MinShadowTable table = min_shadow_table(n, k, t, j);
    const std::size_t size = static_cast<std::size_t>(binomial(2 * k - t, k));
    for (const MinShadowRow& row : table.rows) {
      if (row.size != size) continue;
      EXPECT_EQ(BigInt(row.min_shadow), binomial(2 * k - t, k - j));
      EXPECT_EQ(row.witness.member_union().size(), 2 * k - t);
    }
  }
}

TEST(Oracle, TableIndependentOfWorkers) {
  const std::string once = min_shadow_csv(min_shadow_table(6, 3, 2, 1));
  ::setenv("SHADOWLAB_THREADS", "1", 1);
  const std::string serial = min_shadow_csv(min_shadow_table(6, 3, 2, 1));
  ::setenv("SHADOWLAB_THREADS", "3", 1);
  const std::string threaded = min_shadow_csv(min_shadow_table(6, 3, 2, 1));
  ::unsetenv("SHADOWLAB_THREADS");
  EXPECT_EQ(once, serial);
  EXPECT_EQ(serial, threaded);
}

TEST(Golden, MinShadowTablesRegenerateIdentically) {
  const std::string dir = SHADOWLAB_GOLDEN_DIR;
  for (auto [n, k, t, j] : {std::array{4, 2, 1, 1}, std::array{5, 2, 1, 1}, std::array{5, 3, 1, 2},
                            std::array{6, 3, 2, 1}, std::array{6, 3, 2, 2}}) {
    const std::string name = "min_shadow_" + std::to_string(n) + "_" + std::to_string(k) + "_" +
                             std::to_string(t) + "_" + std::to_string(j) + ".csv";
    const std::string expected = slurp(dir + "/" + name);
    ASSERT_FALSE(expected.empty()) << name;
    EXPECT_EQ(min_shadow_csv(min_shadow_table(n, k, t, j)), expected) << name;
  }
}

TEST(Golden, SmallTableText) {
  EXPECT_EQ(min_shadow_csv(min_shadow_table(4, 2, 1, 1)),
            "size,min_shadow,witness\n1,2,0x3\n2,3,0x3 0x5\n3,3,0x3 0x5 0x6\n");
}

TEST(Parallel, VisitsEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  ::setenv("SHADOWLAB_THREADS", "4", 1);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  ::unsetenv("SHADOWLAB_THREADS");
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, [](std::size_t i) {
                 if (i == 3) throw DomainError("boom");
               }),
               DomainError);
}

TEST(Parallel, EnvironmentOverrides) {
  ::setenv("SHADOWLAB_THREADS", "2", 1);
  EXPECT_EQ(worker_count(), 2U);
  ::unsetenv("SHADOWLAB_THREADS");
  EXPECT_GE(worker_count(), 1U);
  ::setenv("SHADOWLAB_SEED", "77", 1);
  EXPECT_EQ(sampling_seed(5), 77U);
  ::unsetenv("SHADOWLAB_SEED");
  EXPECT_EQ(sampling_seed(5), 5U);
}

TEST(Rng, Deterministic) {
  Rng a(42), b(42), c({1, 2}), d({1, 2});
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next(), b.next());
    EXPECT_EQ(c.next(), d.next());
  }
  Rng e(7);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(e.below(13), 13U);
    const int v = e.between(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
  }
}

TEST(Generate, ProfilesNamesRoundTrip) {
  for (Profile p : kAllProfiles) EXPECT_EQ(profile_from_string(to_string(p)), p);
  EXPECT_FALSE(profile_from_string("nope").has_value());
  EXPECT_EQ(profile_for_seed(0), Profile::Star);
}

TEST(Generate, ShiftedIntersectingOutputs) {
  for (Profile p : kAllProfiles) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Family f = random_shifted_t_intersecting(10, 4, 2, seed, p);
      EXPECT_FALSE(f.empty());
      EXPECT_TRUE(is_t_intersecting(f, 2));
      EXPECT_TRUE(is_shifted(f));
      EXPECT_EQ(f, random_shifted_t_intersecting(10, 4, 2, seed, p));
      if (p == Profile::Star) {
        EXPECT_TRUE(is_subfamily(f, full_star(10, 4, 2)));
        EXPECT_EQ(width(f, 2), 0);
      }
    }
  }
}

TEST(Generate, ProfilesReachDifferentWidths) {
  std::set<int> widths;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    widths.insert(width(random_shifted_t_intersecting(12, 5, 2, seed, profile_for_seed(seed)), 2));
  }
  EXPECT_GE(widths.size(), 3U);
}

TEST(Generate, Semistars) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Family f = random_semistar(9, 5, 3, seed);
    EXPECT_FALSE(f.empty());
    EXPECT_TRUE(is_t_intersecting(f, 3));
    EXPECT_TRUE(is_semistar(f, 3));
    EXPECT_EQ(f, random_semistar(9, 5, 3, seed));
  }
}

TEST(Generate, RandomFamilies) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Family f = random_family(8, 3, seed);
    EXPECT_FALSE(f.empty());
    EXPECT_EQ(f.k(), 3);
    EXPECT_LE(f.max_element(), 8);
    const Family g = random_t_intersecting(8, 3, 1, seed);
    EXPECT_FALSE(g.empty());
    EXPECT_TRUE(is_t_intersecting(g, 1));
  }
}

TEST(Generate, GreedyAndMixtures) {
  const Family g = greedy_t_intersecting(2, {testing_support::ks({1, 2}), testing_support::ks({3, 4}),
                                             testing_support::ks({1, 3})},
                                         1);
  EXPECT_EQ(g, fam(2, {{1, 2}, {1, 3}}));
  const auto mixes = frankl_mixtures(8, 4, 2);
  EXPECT_EQ(mixes.size(), 7U);
  for (const Family& f : mixes) EXPECT_TRUE(is_shifted(f));
}
