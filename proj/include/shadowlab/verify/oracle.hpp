#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "shadowlab/family.hpp"

namespace shadowlab::verify {

// Exhaustive oracles run over all subfamilies of C([n], k), so C(n, k) is
// capped here.
inline constexpr std::size_t kOracleVertexLimit = 20;

// Vertices are the k-subsets of [n] in numeric order; two vertices are
// adjacent when they share at least t elements. A vertex with k < t is
// not t-intersecting with itself and gets no clique at all.
class CompatibilityGraph {
 public:
  // Throws CapacityError when C(n, k) > kOracleVertexLimit.
  CompatibilityGraph(int n, int k, int t);

  int n() const { return n_; }
  int k() const { return k_; }
  int t() const { return t_; }
  std::size_t order() const { return vertices_.size(); }
  KSet vertex(std::size_t v) const { return vertices_[v]; }
  bool admissible(std::size_t v) const { return ((admissible_ >> v) & 1U) != 0; }
  // Adjacency of v as a bit mask over vertex indices, without v itself.
  std::uint32_t neighbours(std::size_t v) const { return adjacency_[v]; }

  Family family_of(std::span<const std::uint32_t> clique) const;

 private:
  int n_;
  int k_;
  int t_;
  std::vector<KSet> vertices_;
  std::vector<std::uint32_t> adjacency_;
  std::uint32_t admissible_ = 0;
};

// Visits every t-intersecting subfamily of C([n], k) exactly once, the
// empty family first, then depth-first with vertices added in increasing
// index order (so the visit order is lexicographic in index sequences).
void enumerate_t_intersecting(int n, int k, int t,
                              const std::function<void(const Family&)>& visitor);

// Depth-first walk over the nonempty cliques whose least vertex is `root`,
// tracking |shadow(F, j)| incrementally. visitor receives the clique as
// ascending vertex indices together with the shadow size. 0 < j < k.
void walk_cliques_with_shadow(
    const CompatibilityGraph& graph, int j, std::size_t root,
    const std::function<void(std::span<const std::uint32_t>, std::size_t)>& visitor);

// Maximal cliques of the compatibility graph (Bron–Kerbosch with pivoting),
// sorted by their vertex index sequences.
std::vector<Family> maximal_t_intersecting(int n, int k, int t);

struct MinShadowRow {
  std::size_t size = 0;
  std::size_t min_shadow = 0;
  Family witness;  // lexicographically first minimizer in visit order
};

struct MinShadowTable {
  int n = 0;
  int k = 0;
  int t = 0;
  int j = 0;
  std::vector<MinShadowRow> rows;  // ascending size, sizes >= 1 only
};

// Per-size minima of |shadow(F, j)| over nonempty t-intersecting F.
// Root subtrees run in parallel; ties resolve to the earliest family in
// visit order, so the table does not depend on the worker count.
MinShadowTable min_shadow_table(int n, int k, int t, int j);

// "size,min_shadow,witness" with the witness as space separated hex words.
std::string min_shadow_csv(const MinShadowTable& table);

}  // namespace shadowlab::verify
