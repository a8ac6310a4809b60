#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "shadowlab/family.hpp"

namespace shadowlab::verify {

// mt19937_64 with a bounded draw written out by hand, so a seed produces the
// same stream with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::initializer_list<std::uint64_t> seed_parts);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int between(int lo, int hi);
  bool percent(int p) { return static_cast<int>(below(100)) < p; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Which A_h mixture the generator draws from.
//   star:     subfamily of A_0
//   frankl:   subfamily of a single A_h
//   mixed:    random subfamily of a union of A_h's, greedily made t-intersecting
//   dense:    a whole A_h plus a few compatible extra sets
//   nonstar:  sets containing [t] and meeting [t+1, t+s], together with sets
//             containing [t+s] - {y} for y in [t]
enum class Profile { Star, Frankl, Mixed, Dense, NonStar };

inline constexpr std::array<Profile, 5> kAllProfiles{Profile::Star, Profile::Frankl, Profile::Mixed,
                                                    Profile::Dense, Profile::NonStar};

std::string_view to_string(Profile p);
std::optional<Profile> profile_from_string(std::string_view name);
// Profile used by sampled checks for a given seed: seeds cycle through all
// profiles.
Profile profile_for_seed(std::uint64_t seed);

// Draws a t-intersecting family from the profile, then returns its shift
// closure. The result is verified t-intersecting and shifted.
// Requires 1 <= t < k <= n <= kMaxGround.
Family random_shifted_t_intersecting(int n, int k, int t, std::uint64_t seed, Profile profile);

// Keeps candidates, in the given order, that share >= t elements with every
// set kept so far.
Family greedy_t_intersecting(int k, const std::vector<KSet>& candidates, int t);

// A t-intersecting (t+1)-semistar, not necessarily shifted: a subfamily of
// A_0 ∪ A_1 or of { F : |F ∩ [t+1]| >= t }, optionally relabelled by a random
// permutation of [n] or pushed through a few random shifts. Verified before
// it is returned.
Family random_semistar(int n, int k, int t, std::uint64_t seed);

// Random subfamily of C([n], k) with a random density; no intersection
// property. Nonempty.
Family random_family(int n, int k, std::uint64_t seed);

// Random t-intersecting subfamily of C([n], k), not shifted. Nonempty.
Family random_t_intersecting(int n, int k, int t, std::uint64_t seed);

// Random nonempty subfamily of `pool`, each member kept with probability
// density_percent / 100.
Family random_subfamily(const Family& pool, Rng& rng, int density_percent);

// Unions of every nonempty selection of A_0, ..., A_{k-t}.
std::vector<Family> frankl_mixtures(int n, int k, int t);

}  // namespace shadowlab::verify
