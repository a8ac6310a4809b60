#include "shadowlab/verify/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "shadowlab/errors.hpp"
#include "shadowlab/exact.hpp"
#include "shadowlab/verify/parallel.hpp"

namespace shadowlab::verify {

CompatibilityGraph::CompatibilityGraph(int n, int k, int t) : n_(n), k_(k), t_(t) {
  require(k >= 1 && n >= k, "oracle needs 1 <= k <= n");
  require(t >= 1, "oracle needs t >= 1");
  const BigInt vertices = binomial(n, k);
  if (vertices > kOracleVertexLimit) {
    throw CapacityError("exhaustive oracle needs C(n,k) <= " + std::to_string(kOracleVertexLimit) +
                        ", got C(" + std::to_string(n) + "," + std::to_string(k) +
                        ") = " + vertices.str());
  }
  const Family layer = enumerate_ksubsets(n, k);
  vertices_.assign(layer.begin(), layer.end());
  adjacency_.assign(vertices_.size(), 0);
  for (std::size_t u = 0; u < vertices_.size(); ++u) {
    if (k >= t) admissible_ |= std::uint32_t{1} << u;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (u != v && vertices_[u].intersection_size(vertices_[v]) >= t) {
        adjacency_[u] |= std::uint32_t{1} << v;
      }
    }
  }
}

Family CompatibilityGraph::family_of(std::span<const std::uint32_t> clique) const {
  std::vector<KSet> members;
  members.reserve(clique.size());
  for (std::uint32_t v : clique) members.push_back(vertices_[v]);
  return Family(k_, std::move(members));
}

namespace {

// Candidates for extending a clique ending at `last`: later vertices
// adjacent to everything so far.
std::uint32_t later_than(std::size_t last) {
  return last >= 31 ? 0 : ~((std::uint32_t{2} << last) - 1);
}

void extend(const CompatibilityGraph& g, std::vector<std::uint32_t>& clique,
            std::uint32_t candidates, const std::function<void(const Family&)>& visitor) {
  for (std::uint32_t rest = candidates; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::uint32_t>(std::countr_zero(rest));
    clique.push_back(v);
    visitor(g.family_of(clique));
    extend(g, clique, candidates & g.neighbours(v) & later_than(v), visitor);
    clique.pop_back();
  }
}

// Shadow membership counts over the (k - j)-subsets of [n].
class ShadowCounter {
 public:
  ShadowCounter(const CompatibilityGraph& g, int j) {
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    subsets_.resize(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
      for_each_subset_of_size(g.vertex(v), g.k() - j, [&](KSet s) {
        const auto [it, fresh] = index.try_emplace(s.bits(), static_cast<std::uint32_t>(index.size()));
        subsets_[v].push_back(it->second);
      });
    }
    counts_.assign(index.size(), 0);
  }

  void add(std::uint32_t v) {
    for (std::uint32_t s : subsets_[v]) {
      if (counts_[s]++ == 0) ++size_;
    }
  }
  void remove(std::uint32_t v) {
    for (std::uint32_t s : subsets_[v]) {
      if (--counts_[s] == 0) --size_;
    }
  }
  std::size_t size() const { return size_; }

 private:
  std::vector<std::vector<std::uint32_t>> subsets_;
  std::vector<std::uint32_t> counts_;
  std::size_t size_ = 0;
};

void walk(const CompatibilityGraph& g, ShadowCounter& counter, std::vector<std::uint32_t>& clique,
          std::uint32_t candidates,
          const std::function<void(std::span<const std::uint32_t>, std::size_t)>& visitor) {
  for (std::uint32_t rest = candidates; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::uint32_t>(std::countr_zero(rest));
    clique.push_back(v);
    counter.add(v);
    visitor(clique, counter.size());
    walk(g, counter, clique, candidates & g.neighbours(v) & later_than(v), visitor);
    counter.remove(v);
    clique.pop_back();
  }
}

void bron_kerbosch(const CompatibilityGraph& g, std::vector<std::uint32_t>& r, std::uint32_t p,
                   std::uint32_t x, std::vector<std::vector<std::uint32_t>>& out) {
  if (p == 0) {
    if (x == 0) {
      out.push_back(r);
      std::sort(out.back().begin(), out.back().end());
    }
    return;
  }
  // Pivot with the most neighbours in p.
  std::uint32_t best_cover = 0;
  int best_count = -1;
  for (std::uint32_t rest = p | x; rest != 0; rest &= rest - 1) {
    const auto u = static_cast<std::uint32_t>(std::countr_zero(rest));
    const int count = std::popcount(p & g.neighbours(u));
    if (count > best_count) {
      best_count = count;
      best_cover = g.neighbours(u);
    }
  }
  for (std::uint32_t rest = p & ~best_cover; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::uint32_t>(std::countr_zero(rest));
    const std::uint32_t bit = std::uint32_t{1} << v;
    r.push_back(v);
    bron_kerbosch(g, r, p & g.neighbours(v), x & g.neighbours(v), out);
    r.pop_back();
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

void enumerate_t_intersecting(int n, int k, int t,
                              const std::function<void(const Family&)>& visitor) {
  const CompatibilityGraph g(n, k, t);
  visitor(Family(k));
  std::vector<std::uint32_t> clique;
  std::uint32_t all = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.admissible(v)) all |= std::uint32_t{1} << v;
  }
  extend(g, clique, all, visitor);
}

void walk_cliques_with_shadow(
    const CompatibilityGraph& graph, int j, std::size_t root,
    const std::function<void(std::span<const std::uint32_t>, std::size_t)>& visitor) {
  require(j > 0 && j < graph.k(), "shadow walk needs 0 < j < k");
  require(root < graph.order(), "root vertex out of range");
  if (!graph.admissible(root)) return;
  ShadowCounter counter(graph, j);
  std::vector<std::uint32_t> clique{static_cast<std::uint32_t>(root)};
  counter.add(static_cast<std::uint32_t>(root));
  visitor(clique, counter.size());
  walk(graph, counter, clique, graph.neighbours(root) & later_than(root), visitor);
}

std::vector<Family> maximal_t_intersecting(int n, int k, int t) {
  const CompatibilityGraph g(n, k, t);
  std::uint32_t all = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.admissible(v)) all |= std::uint32_t{1} << v;
  }
  std::vector<std::vector<std::uint32_t>> cliques;
  std::vector<std::uint32_t> r;
  if (all != 0) bron_kerbosch(g, r, all, 0, cliques);
  std::sort(cliques.begin(), cliques.end());
  std::vector<Family> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) out.push_back(g.family_of(c));
  return out;
}

MinShadowTable min_shadow_table(int n, int k, int t, int j) {
  require(j > 0 && j < k, "min_shadow_table needs 0 < j < k");
  const CompatibilityGraph g(n, k, t);

  struct Best {
    std::size_t min_shadow = 0;
    std::vector<std::uint32_t> clique;  // empty: size not reached
  };
  // per_root[root][size]
  std::vector<std::vector<Best>> per_root(g.order(), std::vector<Best>(g.order() + 1));
  parallel_for(g.order(), [&](std::size_t root) {
    auto& best = per_root[root];
    walk_cliques_with_shadow(g, j, root, [&](std::span<const std::uint32_t> clique, std::size_t s) {
      Best& b = best[clique.size()];
      if (b.clique.empty() || s < b.min_shadow) {
        b.min_shadow = s;
        b.clique.assign(clique.begin(), clique.end());
      }
    });
  });

  MinShadowTable table{n, k, t, j, {}};
  for (std::size_t size = 1; size <= g.order(); ++size) {
    const Best* pick = nullptr;
    for (std::size_t root = 0; root < g.order(); ++root) {
      const Best& b = per_root[root][size];
      if (b.clique.empty()) continue;
      // Roots are scanned in order, so the first strict improvement wins ties.
      if (pick == nullptr || b.min_shadow < pick->min_shadow) pick = &b;
    }
    if (pick != nullptr) table.rows.push_back({size, pick->min_shadow, g.family_of(pick->clique)});
  }
  return table;
}

std::string min_shadow_csv(const MinShadowTable& table) {
  std::ostringstream out;
  out << "size,min_shadow,witness\n";
  for (const auto& row : table.rows) {
    out << row.size << ',' << row.min_shadow << ',';
    bool first = true;
    for (KSet m : row.witness) {
      if (!first) out << ' ';
      out << m.to_hex();
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace shadowlab::verify
