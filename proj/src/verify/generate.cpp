#include "shadowlab/verify/generate.hpp"

#include <limits>
#include <numeric>

#include "shadowlab/canonical.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/shift.hpp"
#include "shadowlab/structure.hpp"

namespace shadowlab::verify {

Rng::Rng(std::initializer_list<std::uint64_t> seed_parts) {
  std::vector<std::uint32_t> words;
  for (std::uint64_t part : seed_parts) {
    words.push_back(static_cast<std::uint32_t>(part));
    words.push_back(static_cast<std::uint32_t>(part >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  require(bound > 0, "Rng::below: empty range");
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

int Rng::between(int lo, int hi) {
  require(lo <= hi, "Rng::between: empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::Star: return "star";
    case Profile::Frankl: return "frankl";
    case Profile::Mixed: return "mixed";
    case Profile::Dense: return "dense";
    case Profile::NonStar: return "nonstar";
  }
  return "?";
}

std::optional<Profile> profile_from_string(std::string_view name) {
  for (Profile p : kAllProfiles) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

Profile profile_for_seed(std::uint64_t seed) { return kAllProfiles[seed % kAllProfiles.size()]; }

Family greedy_t_intersecting(int k, const std::vector<KSet>& candidates, int t) {
  std::vector<KSet> kept;
  for (KSet c : candidates) {
    if (c.size() < t) continue;
    bool ok = true;
    for (KSet m : kept) {
      if (m.intersection_size(c) < t) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(c);
  }
  return Family(k, std::move(kept));
}

Family random_subfamily(const Family& pool, Rng& rng, int density_percent) {
  std::vector<KSet> out;
  for (KSet m : pool) {
    if (rng.percent(density_percent)) out.push_back(m);
  }
  if (out.empty() && !pool.empty()) out.push_back(pool[rng.below(pool.size())]);
  return Family(pool.k(), std::move(out));
}

namespace {

std::vector<KSet> shuffled(const Family& f, Rng& rng) {
  std::vector<KSet> items(f.begin(), f.end());
  rng.shuffle(items);
  return items;
}

Family union_of_frankl(int n, int k, int t, const std::vector<int>& hs) {
  Family out(k);
  for (int h : hs) out = family_union(out, frankl_family(n, k, t, h));
  return out;
}

// Sets containing [t] that meet [t+1, t+s], plus sets containing [t+s] - {y}
// for some y in [t]. For s >= 2 any two of them share t elements.
Family nonstar_pool(int n, int k, int t, int s) {
  const KSet core = KSet::prefix(t);
  const KSet window = KSet::interval(t + 1, t + s);
  const KSet block = KSet::prefix(t + s);
  return enumerate_ksubsets(n, k).filter([&](KSet m) {
    if (core.subset_of(m)) return !(m & window).empty();
    return m.intersection_size(block) == t + s - 1 && (block - m).max_element() <= t;
  });
}

Family draw_profile(int n, int k, int t, Profile profile, Rng& rng) {
  const int hmax = k - t;
  switch (profile) {
    case Profile::Star:
      return random_subfamily(frankl_family(n, k, t, 0), rng, rng.between(1, 100));
    case Profile::Frankl:
      return random_subfamily(frankl_family(n, k, t, rng.between(0, hmax)), rng, rng.between(1, 100));
    case Profile::Mixed: {
      std::vector<int> hs;
      for (int h = 0; h <= hmax; ++h) {
        if (rng.percent(50)) hs.push_back(h);
      }
      if (hs.empty()) hs.push_back(rng.between(0, hmax));
      const Family pool = random_subfamily(union_of_frankl(n, k, t, hs), rng, rng.between(5, 100));
      return greedy_t_intersecting(k, shuffled(pool, rng), t);
    }
    case Profile::Dense: {
      const Family base = frankl_family(n, k, t, rng.between(0, hmax));
      std::vector<KSet> candidates(base.begin(), base.end());
      const Family layer = enumerate_ksubsets(n, k);
      for (int tries = 0; tries < 64; ++tries) candidates.push_back(layer[rng.below(layer.size())]);
      return greedy_t_intersecting(k, candidates, t);
    }
    case Profile::NonStar: {
      const int s_max = std::min(k - t + 1, n - t);
      if (s_max < 2) return random_subfamily(frankl_family(n, k, t, 0), rng, rng.between(1, 100));
      const int s = rng.between(std::min(t + 1, s_max), s_max);
      return random_subfamily(nonstar_pool(n, k, t, s), rng, rng.between(10, 100));
    }
  }
  throw ContractViolation("unknown profile");
}

}  // namespace

Family random_shifted_t_intersecting(int n, int k, int t, std::uint64_t seed, Profile profile) {
  require(t >= 1 && t < k && k <= n && n <= kMaxGround,
          "random_shifted_t_intersecting: need 1 <= t < k <= n <= " + std::to_string(kMaxGround));
  Rng rng{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k),
          static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(profile)};
  Family drawn = draw_profile(n, k, t, profile, rng);
  for (int attempt = 0; !is_t_intersecting(drawn, t) || drawn.empty(); ++attempt) {
    ensure(attempt < 1000, "random_shifted_t_intersecting: no t-intersecting draw");
    drawn = draw_profile(n, k, t, profile, rng);
  }
  Family out = shift_closure(drawn);
  ensure(out.size() == drawn.size(), "random_shifted_t_intersecting: closure changed the size");
  ensure(is_t_intersecting(out, t), "random_shifted_t_intersecting: closure lost t-intersection");
  ensure(is_shifted(out), "random_shifted_t_intersecting: closure is not shifted");
  return out;
}

Family random_semistar(int n, int k, int t, std::uint64_t seed) {
  require(t >= 1 && t < k && k <= n && n <= kMaxGround && t + 2 <= n,
          "random_semistar: need 1 <= t < k <= n, t + 2 <= n");
  Rng rng{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k),
          static_cast<std::uint64_t>(t), 0x5e31u};
  const KSet center = KSet::prefix(t + 1);
  const Family pool = rng.percent(50)
                          ? family_union(frankl_family(n, k, t, 0), frankl_family(n, k, t, 1))
                          : enumerate_ksubsets(n, k).filter(
                                [&](KSet m) { return m.intersection_size(center) >= t; });
  Family f = greedy_t_intersecting(k, shuffled(random_subfamily(pool, rng, rng.between(10, 100)), rng), t);

  const std::uint64_t mode = rng.below(3);
  if (mode == 0) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    rng.shuffle(perm);
    std::vector<KSet> relabelled;
    for (KSet m : f) {
      std::vector<int> image;
      for (int e : m.elements()) image.push_back(perm[static_cast<std::size_t>(e - 1)]);
      relabelled.push_back(KSet::of(image));
    }
    f = Family(k, std::move(relabelled));
  } else if (mode == 1) {
    const int rounds = rng.between(1, 3);
    for (int r = 0; r < rounds; ++r) {
      const int i = rng.between(1, n - 1);
      const int jj = rng.between(i + 1, n);
      Family shifted = shift_pair(f, i, jj);
      if (is_semistar(shifted, t)) f = std::move(shifted);
    }
  }
  ensure(!f.empty(), "random_semistar: empty result");
  ensure(is_t_intersecting(f, t), "random_semistar: result is not t-intersecting");
  ensure(is_semistar(f, t), "random_semistar: result is not a semistar");
  return f;
}

Family random_family(int n, int k, std::uint64_t seed) {
  require(k >= 1 && k <= n && n <= kMaxGround, "random_family: need 1 <= k <= n");
  Rng rng{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k), 0xfa3u};
  return random_subfamily(enumerate_ksubsets(n, k), rng, rng.between(1, 60));
}

Family random_t_intersecting(int n, int k, int t, std::uint64_t seed) {
  require(t >= 1 && t <= k && k <= n && n <= kMaxGround, "random_t_intersecting: need 1 <= t <= k <= n");
  Rng rng{seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k),
          static_cast<std::uint64_t>(t), 0x71u};
  const Family pool = random_subfamily(enumerate_ksubsets(n, k), rng, rng.between(5, 100));
  return greedy_t_intersecting(k, shuffled(pool, rng), t);
}

std::vector<Family> frankl_mixtures(int n, int k, int t) {
  require(t >= 1 && k > t && k - t < 16, "frankl_mixtures: need 1 <= t < k, k - t < 16");
  const int count = k - t + 1;
  std::vector<Family> parts;
  for (int h = 0; h < count; ++h) parts.push_back(frankl_family(n, k, t, h));
  std::vector<Family> out;
  for (unsigned mask = 1; mask < (1U << count); ++mask) {
    Family u(k);
    for (int h = 0; h < count; ++h) {
      if ((mask >> h) & 1U) u = family_union(u, parts[static_cast<std::size_t>(h)]);
    }
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace shadowlab::verify
