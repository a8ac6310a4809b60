#pragma once

#include <utility>

#include "shadowlab/exact.hpp"

// Closed-form shadow bounds, size thresholds and the coefficients that
// relate them. Every evaluator is exact and rejects parameters outside the
// range where the bound is claimed (ContractViolation).
namespace shadowlab::bounds {

// C(n, k - j) / C(n, k): the shadow ratio of the full k-layer of [n].
// 0 < j < k <= n.
ExactRatio sperner_ratio(int n, int k, int j);

// C(2k - t, ell) / C(2k - t, k): lower bound on |sigma_ell(F)| / |F| for
// t-intersecting F. 1 <= t < k, k - t <= ell < k.
ExactRatio intersecting_shadow_ratio(int k, int t, int ell);

// C(2k - 2 - t, k - 1 - j) / C(2k - 2 - t, k - 1): the improved ratio for
// large t-intersecting families. 1 <= j < t < k.
ExactRatio large_family_shadow_bound(int k, int t, int j);

// C(2k - t, k) (1 + (t - j) / (k + t + 1 - j)): the size from which the
// improved ratio applies. 1 <= j < t < k.
ExactRatio large_family_threshold(int k, int t, int j);

// C(t + 2w, t + w - j) / C(t + 2w, t + w): shadow ratio guaranteed by width
// w. 0 < j <= t, w >= 0. At w = k - t this is the intersecting ratio with
// ell = k - j.
ExactRatio width_shadow_ratio(int t, int w, int j);

// Same ratio through the product prod_{1 <= i <= j} (1 + (t - j)/(w + i)).
ExactRatio width_shadow_ratio_product(int t, int w, int j);

// Gain of the large-family ratio over the intersecting ratio:
// j(t - j) / (k(k - t)) * C(2k - t, k - j) / C(2k - t, k). 1 <= j < t < k.
ExactRatio full_width_gap(int k, int t, int j);

// Gain of the outer part's ratio (t + 1, width k - t - 2) over the
// intersecting ratio. 1 <= j < t < k, k - t >= 2.
ExactRatio outer_part_gain(int k, int t, int j);

// width_shadow_ratio(t, w, j) - width_shadow_ratio(t, k - t, j).
// 1 <= w <= k - t, 0 < j <= t.
ExactRatio width_gap(int w, int k, int t, int j);

// width_shadow_ratio(t + 1, w - 1, j) - width_shadow_ratio(t, w, j).
// w >= 1, 0 < j <= t.
ExactRatio width_outer_gain(int w, int t, int j);

// C(t + 2, j + 1) / (t + 2), for 1 < j < t.
ExactRatio semistar_bound(int t, int j);

// C(t, j), for 0 < j <= t.
ExactRatio star_bound(int t, int j);

// C(n - 1, k - t); requires n > 2k - t.
BigInt universal_size_bound(int n, int k, int t);

// t C(n - 2k + t, k - t - 1) + sum_{t+2 <= ell <= k} C(2k - t, ell - t) C(n, k - ell).
// Requires t + 2 <= k - t + 1 and n >= 2k - t.
BigInt non_star_size_threshold(int n, int k, int t);

// ((a + b) / a) C(2k - t, w + 1) C(n - 2k + t, k - w - t - 1) with
// a = width_gap, b = width_outer_gain; the vanishing correction term is
// omitted. 1 <= w < k - t, 1 <= j < t, n >= 2k - t.
ExactRatio width_size_threshold(int n, int k, int t, int w, int j);

// The two strict monotonicity statements for width ratios:
//   first:  ratio at width h exceeds ratio at width w;
//   second: C(t+2w, t+w-j+r)/C(t+2w, t+w+r) exceeds the centered ratio.
// 0 < j < t, 0 <= h < w, 1 <= r <= w.
std::pair<bool, bool> width_ratio_monotonicity(int t, int j, int h, int w, int r);

}  // namespace shadowlab::bounds
