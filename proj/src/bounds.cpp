#include "shadowlab/bounds.hpp"

#include <string>

#include "shadowlab/errors.hpp"

namespace shadowlab::bounds {

namespace {

ExactRatio binomial_ratio(std::int64_t n, std::int64_t a, std::int64_t b) {
  return ExactRatio(binomial(n, a), binomial(n, b));
}

std::string args(std::initializer_list<std::pair<const char*, int>> values) {
  std::string out;
  for (const auto& [name, v] : values) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + "=" + std::to_string(v);
  }
  return out;
}

void check_j_t_k(const char* who, int k, int t, int j) {
  require(1 <= j && j < t && t < k,
          std::string(who) + ": need 1 <= j < t < k (" + args({{"k", k}, {"t", t}, {"j", j}}) + ")");
}

}  // namespace

ExactRatio sperner_ratio(int n, int k, int j) {
  require(0 < j && j < k && k <= n, "sperner_ratio: need 0 < j < k <= n (" +
                                        args({{"n", n}, {"k", k}, {"j", j}}) + ")");
  return binomial_ratio(n, k - j, k);
}

ExactRatio intersecting_shadow_ratio(int k, int t, int ell) {
  require(1 <= t && t < k, "intersecting_shadow_ratio: need 1 <= t < k");
  require(k - t <= ell && ell < k, "intersecting_shadow_ratio: need k - t <= ell < k (" +
                                       args({{"k", k}, {"t", t}, {"ell", ell}}) + ")");
  return binomial_ratio(2 * k - t, ell, k);
}

ExactRatio large_family_shadow_bound(int k, int t, int j) {
  check_j_t_k("large_family_shadow_bound", k, t, j);
  return binomial_ratio(2 * (k - 1) - t, k - 1 - j, k - 1);
}

ExactRatio large_family_threshold(int k, int t, int j) {
  check_j_t_k("large_family_threshold", k, t, j);
  return ExactRatio(binomial(2 * k - t, k)) * (ExactRatio(1) + ExactRatio(t - j, k + t + 1 - j));
}

ExactRatio width_shadow_ratio(int t, int w, int j) {
  require(0 < j && j <= t && w >= 0,
          "width_shadow_ratio: need 0 < j <= t, w >= 0 (" + args({{"t", t}, {"w", w}, {"j", j}}) + ")");
  return binomial_ratio(t + 2 * w, t + w - j, t + w);
}

ExactRatio width_shadow_ratio_product(int t, int w, int j) {
  require(0 < j && j <= t && w >= 0, "width_shadow_ratio_product: need 0 < j <= t, w >= 0");
  ExactRatio product = 1;
  for (int i = 1; i <= j; ++i) product *= ExactRatio(1) + ExactRatio(t - j, w + i);
  return product;
}

ExactRatio full_width_gap(int k, int t, int j) {
  check_j_t_k("full_width_gap", k, t, j);
  return ExactRatio(j * (t - j), k * (k - t)) * binomial_ratio(2 * k - t, k - j, k);
}

ExactRatio outer_part_gain(int k, int t, int j) {
  check_j_t_k("outer_part_gain", k, t, j);
  require(k - t >= 2, "outer_part_gain: need k - t >= 2");
  const std::int64_t K = k, T = t, J = j;
  const std::int64_t num = J * (K * K - T * T - T) - J * J * (K - 2 * T - 1) - J * J * J;
  const std::int64_t den = K * (K - T) * (K - T - 1);
  return ExactRatio(num, den) * binomial_ratio(2 * k - t, k - j, k);
}

ExactRatio width_gap(int w, int k, int t, int j) {
  require(1 <= t && t < k, "width_gap: need 1 <= t < k");
  require(1 <= w && w <= k - t, "width_gap: need 1 <= w <= k - t");
  return width_shadow_ratio(t, w, j) - width_shadow_ratio(t, k - t, j);
}

ExactRatio width_outer_gain(int w, int t, int j) {
  require(w >= 1, "width_outer_gain: need w >= 1");
  return width_shadow_ratio(t + 1, w - 1, j) - width_shadow_ratio(t, w, j);
}

ExactRatio semistar_bound(int t, int j) {
  require(1 < j && j < t, "semistar_bound: need 1 < j < t");
  return ExactRatio(binomial(t + 2, j + 1), BigInt(t + 2));
}

ExactRatio star_bound(int t, int j) {
  require(0 < j && j <= t, "star_bound: need 0 < j <= t");
  return ExactRatio(binomial(t, j));
}

BigInt universal_size_bound(int n, int k, int t) {
  require(1 <= t && t < k, "universal_size_bound: need 1 <= t < k");
  require(n > 2 * k - t, "universal_size_bound: need n > 2k - t");
  return binomial(n - 1, k - t);
}

BigInt non_star_size_threshold(int n, int k, int t) {
  require(1 <= t && t < k, "non_star_size_threshold: need 1 <= t < k");
  require(t + 2 <= k - t + 1, "non_star_size_threshold: need t + 2 <= k - t + 1");
  require(n >= 2 * k - t, "non_star_size_threshold: need n >= 2k - t");
  BigInt total = BigInt(t) * binomial(n - 2 * k + t, k - t - 1);
  for (int ell = t + 2; ell <= k; ++ell) total += binomial(2 * k - t, ell - t) * binomial(n, k - ell);
  return total;
}

ExactRatio width_size_threshold(int n, int k, int t, int w, int j) {
  check_j_t_k("width_size_threshold", k, t, j);
  require(1 <= w && w < k - t, "width_size_threshold: need 1 <= w < k - t");
  require(n >= 2 * k - t, "width_size_threshold: need n >= 2k - t");
  const ExactRatio a = width_gap(w, k, t, j);
  const ExactRatio b = width_outer_gain(w, t, j);
  return (a + b) / a * ExactRatio(binomial(2 * k - t, w + 1) * binomial(n - 2 * k + t, k - w - t - 1));
}

std::pair<bool, bool> width_ratio_monotonicity(int t, int j, int h, int w, int r) {
  require(0 < j && j < t, "width_ratio_monotonicity: need 0 < j < t");
  require(0 <= h && h < w, "width_ratio_monotonicity: need 0 <= h < w");
  require(1 <= r && r <= w, "width_ratio_monotonicity: need 1 <= r <= w");
  const ExactRatio centered = binomial_ratio(t + 2 * w, t + w - j, t + w);
  const bool narrower = binomial_ratio(t + 2 * h, t + h - j, t + h) > centered;
  const bool offset = binomial_ratio(t + 2 * w, t + w - j + r, t + w + r) > centered;
  return {narrower, offset};
}

}  // namespace shadowlab::bounds
