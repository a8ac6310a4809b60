#include "shadowlab/verify/scan.hpp"

#include <algorithm>

#include "shadowlab/bounds.hpp"
#include "shadowlab/canonical.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/shadow.hpp"
#include "shadowlab/structure.hpp"

namespace shadowlab::verify {

namespace {

std::string point(int k, int t, int j, int s, int n) {
  return "(k=" + std::to_string(k) + ", t=" + std::to_string(t) + ", j=" + std::to_string(j) +
         ", s=" + std::to_string(s) + ", n=" + std::to_string(n) + ")";
}

ExactRatio epsilon_of(int k, int t, int j, int s) {
  BigInt num = BigInt(j) * (t - j);
  for (int i = 0; i < j; ++i) num *= (s - i);
  BigInt den = 1;
  for (int i = 0; i < j + 2; ++i) den *= (k - 1);
  return ExactRatio(num, den);
}

}  // namespace

ScanReport scan_example15(int k, int t, int j, std::pair<int, int> s_range,
                          std::pair<int, int> n_range, const ScanOptions& options) {
  ScanReport report;
  if (!(k > t && t > 2)) {
    report.notes.push_back("skipped k=" + std::to_string(k) + ", t=" + std::to_string(t) +
                           ": construction needs k > t > 2");
    return report;
  }
  if (!(j >= 1 && j < t)) {
    report.notes.push_back("skipped j=" + std::to_string(j) + ": bound needs 1 <= j < t");
    return report;
  }
  const BigInt layer = binomial(2 * k - t, k);
  if (layer > options.layer_limit) {
    report.notes.push_back("skipped k=" + std::to_string(k) + ", t=" + std::to_string(t) +
                           ": C(2k-t,k) = " + layer.str() + " exceeds the layer limit");
    return report;
  }
  const ExactRatio bound = bounds::large_family_shadow_bound(k, t, j);
  for (int s = s_range.first; s <= s_range.second; ++s) {
    if (s < 0 || s >= k - t - 1) {
      report.notes.push_back("skipped s=" + std::to_string(s) + " at k=" + std::to_string(k) +
                             ", t=" + std::to_string(t) + ": need 0 <= s < k - t - 1");
      continue;
    }
    const ExactRatio eps = epsilon_of(k, t, j, s);
    for (int n = n_range.first; n <= n_range.second; ++n) {
      if (n <= 2 * k - t || n > kMaxGround) {
        report.notes.push_back("skipped " + point(k, t, j, s, n) + ": need 2k - t < n <= " +
                               std::to_string(kMaxGround));
        continue;
      }
      const Family f = example15(n, k, t, s);
      ScanRow row;
      row.k = k;
      row.t = t;
      row.j = j;
      row.s = s;
      row.n = n;
      row.family_size = f.size();
      row.shadow_size = shadow(f, j).size();
      row.ratio = ExactRatio(BigInt(row.shadow_size), BigInt(row.family_size));
      row.bound = bound;
      row.epsilon = eps;
      row.shadow_upper = binomial(2 * k - t, k - j) + BigInt(n - 2 * k + t) * binomial(k - 1 + s, s + j);
      row.layer_size = layer;
      row.t_intersecting = is_t_intersecting(f, t);
      row.above_layer = BigInt(row.family_size) > layer;
      row.beats_bound = row.t_intersecting && row.above_layer && row.ratio < bound;
      report.rows.push_back(row);
      if (options.stop_at_first && row.beats_bound) return report;
    }
  }
  return report;
}

std::optional<ScanRow> find_construction_witness(int k_max, int n_max, const ScanOptions& options,
                                                 std::vector<std::string>* notes) {
  ScanOptions first = options;
  first.stop_at_first = true;
  for (int k = 5; k <= k_max; ++k) {
    for (int t = 3; t <= k - 2; ++t) {
      for (int j = 1; j < t; ++j) {
        const int n_hi = std::min(n_max, kMaxGround);
        if (n_hi <= 2 * k - t) continue;
        ScanReport r = scan_example15(k, t, j, {0, k - t - 2}, {2 * k - t + 1, n_hi}, first);
        if (notes != nullptr) notes->insert(notes->end(), r.notes.begin(), r.notes.end());
        if (!r.rows.empty() && r.rows.back().beats_bound) return r.rows.back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace shadowlab::verify
