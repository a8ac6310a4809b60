#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadowlab/exact.hpp"

namespace shadowlab::verify {

// One point of the two-part construction scan.
struct ScanRow {
  int k = 0;
  int t = 0;
  int j = 0;
  int s = 0;
  int n = 0;
  std::size_t family_size = 0;
  std::size_t shadow_size = 0;
  ExactRatio ratio;           // |shadow| / |F|
  ExactRatio bound;           // large-family shadow bound at (k, t, j)
  ExactRatio epsilon;         // j(t-j) s(s-1)...(s-j+1) / (k-1)^(j+2)
  BigInt shadow_upper;        // C(2k-t, k-j) + (n-2k+t) C(k-1+s, s+j)
  BigInt layer_size;          // C(2k-t, k)
  bool t_intersecting = false;
  bool above_layer = false;   // |F| > C(2k-t, k)
  bool beats_bound = false;   // t-intersecting, above the layer, ratio < bound
};

struct ScanOptions {
  // Parameter points whose inner part C(2k-t, k) exceeds this are skipped.
  std::size_t layer_limit = 250000;
  bool stop_at_first = false;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::vector<std::string> notes;  // skipped points and why
};

// Builds the construction for every s in s_range and n in n_range
// (inclusive) and compares its shadow ratio with the large-family bound.
// Points violating the construction's constraints are skipped with a note.
ScanReport scan_example15(int k, int t, int j, std::pair<int, int> s_range,
                          std::pair<int, int> n_range, const ScanOptions& options = {});

// Searches k = 5..k_max, then t, j, s, n in increasing order (n up to
// n_max) for the first point that beats the bound.
std::optional<ScanRow> find_construction_witness(int k_max, int n_max, const ScanOptions& options,
                                                 std::vector<std::string>* notes = nullptr);

}  // namespace shadowlab::verify
