#include "powergraph/power_graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "powergraph/arith.hpp"

namespace powergraph {

Digraph power_digraph(const Group& g) {
  const std::size_t n = g.order();
  Digraph d(n);
  for (ElementId x = 0; x < n; ++x)
    g.cyclic_subgroup(x).for_each([&](std::size_t y) {
      if (y != x) d.add_arc(x, y);
    });
  return d;
}

Graph power_graph(const Group& g) { return power_digraph(g).underlying(); }

std::vector<std::size_t> ascending_class_rank(const Group& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> rank(n, 0);
  VertexSet done(n);
  for (ElementId x = 0; x < n; ++x) {
    if (done.contains(x)) continue;
    auto cls = generator_class(g, x);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      rank[cls[i]] = i;
      done.insert(cls[i]);
    }
  }
  return rank;
}

Digraph transitive_orientation(const Group& g) {
  return transitive_orientation(g, ascending_class_rank(g));
}

Digraph transitive_orientation(const Group& g, const std::vector<std::size_t>& class_rank) {
  const std::size_t n = g.order();
  if (class_rank.size() != n) throw std::invalid_argument("class_rank size must equal |G|");
  Digraph d(n);
  for (ElementId x = 0; x < n; ++x) {
    const VertexSet& cx = g.cyclic_subgroup(x);
    cx.for_each([&](std::size_t y) {
      if (y == x) return;
      const VertexSet& cy = g.cyclic_subgroup(static_cast<ElementId>(y));
      bool same = cy == cx;
      if (!same || class_rank[y] < class_rank[x]) d.add_arc(x, y);
    });
  }
  return d;
}

bool is_transitive(const Digraph& d) {
  for (std::size_t u = 0; u < d.size(); ++u) {
    const VertexSet& su = d.successors(u);
    bool ok = true;
    su.for_each([&](std::size_t v) {
      if (ok && !d.successors(v).is_subset_of(su)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

unsigned distance(const Graph& pg, std::size_t x, std::size_t y) {
  if (x == y) return 0;
  if (pg.adjacent(x, y)) return 1;
  // The identity (vertex 0) is adjacent to every other vertex.
  if (pg.adjacent(0, x) && pg.adjacent(0, y)) return 2;
  assert(false && "power graph without a universal identity vertex");
  return kUnreachable;
}

Neighborhoods neighborhoods(const Graph& pg, std::size_t x) {
  Neighborhoods nb{pg.neighbors(x), pg.neighbors(x)};
  nb.closed.insert(x);
  return nb;
}

VertexSet separating_set(const Graph& pg, std::size_t x, std::size_t y) {
  if (x == y) throw std::invalid_argument("separating_set: x and y must differ");
  // Away from x and y all distances are 1 or 2, so they differ exactly where
  // adjacency differs.
  VertexSet r = pg.neighbors(x) ^ pg.neighbors(y);
  r.insert(x);
  r.insert(y);
  return r;
}

PerfectionReport perfection_check(const Group& g) {
  PerfectionReport report;
  const CyclicPoset poset = cyclic_subgroup_poset(g);

  // Subgroups are sorted by size, so every proper subgroup comes first.
  std::vector<std::uint64_t> best(poset.size(), 0);
  for (std::size_t j = 0; j < poset.size(); ++j) {
    std::uint64_t below = 0;
    poset.below[j].for_each([&](std::size_t i) { below = std::max(below, best[i]); });
    best[j] = below + arith::totient(poset.subgroups[j].size);
    report.omega = std::max(report.omega, best[j]);
  }

  // Height coloring on the orientation. Processing elements by ascending
  // subgroup size, then class rank, visits every predecessor first.
  const std::size_t n = g.order();
  const Digraph orientation = transitive_orientation(g);
  const auto rank = ascending_class_rank(g);
  std::vector<ElementId> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::sort(topo.begin(), topo.end(), [&](ElementId a, ElementId b) {
    if (g.element_order(a) != g.element_order(b)) return g.element_order(a) < g.element_order(b);
    return rank[a] < rank[b];
  });
  report.coloring.assign(n, 0);
  for (ElementId x : topo) {
    std::size_t h = 0;
    orientation.successors(x).for_each([&](std::size_t y) {
      assert(report.coloring[y] != 0);
      h = std::max(h, report.coloring[y]);
    });
    report.coloring[x] = h + 1;
    report.chi = std::max<std::uint64_t>(report.chi, h + 1);
  }

  const Graph pg = power_graph(g);
  report.coloring_proper = true;
  for (auto [u, v] : pg.edges())
    if (report.coloring[u] == report.coloring[v]) report.coloring_proper = false;
  report.holds = report.coloring_proper && report.chi == report.omega;
  return report;
}

}  // namespace powergraph
