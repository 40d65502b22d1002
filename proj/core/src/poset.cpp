#include "powergraph/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "powergraph/arith.hpp"
#include "powergraph/power_graph.hpp"

namespace powergraph {

HomogeneityError::HomogeneityError(std::size_t block, std::size_t vertex)
    : PosetError("block " + std::to_string(block) + " is not homogeneous: vertex " +
                 std::to_string(vertex) + " splits it"),
      block_(block),
      vertex_(vertex) {}

Poset Poset::from_relation(std::vector<VertexSet> less, std::vector<std::int64_t> labels) {
  const std::size_t n = less.size();
  if (!labels.empty() && labels.size() != n) throw PosetError("label count does not match vertex count");
  for (std::size_t x = 0; x < n; ++x) {
    if (less[x].capacity() != n) throw PosetError("relation row has wrong width");
    if (less[x].contains(x)) throw PosetError("not irreflexive at " + std::to_string(x));
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::string failure;
    less[x].for_each([&](std::size_t y) {
      if (!failure.empty()) return;
      if (less[y].contains(x))
        failure = "not antisymmetric at (" + std::to_string(x) + ", " + std::to_string(y) + ")";
      else if (!less[y].is_subset_of(less[x]))
        failure = "not transitive through (" + std::to_string(x) + ", " + std::to_string(y) + ")";
    });
    if (!failure.empty()) throw PosetError(failure);
  }
  Poset p;
  p.below_.assign(n, VertexSet(n));
  for (std::size_t x = 0; x < n; ++x) less[x].for_each([&](std::size_t y) { p.below_[y].insert(x); });
  p.above_ = std::move(less);
  p.labels_ = std::move(labels);
  return p;
}

Poset Poset::from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                        std::vector<std::int64_t> labels) {
  std::vector<VertexSet> less(n, VertexSet(n));
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw PosetError("pair out of range");
    less[a].insert(b);
  }
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (less[i].contains(k)) less[i] |= less[k];
  return from_relation(std::move(less), std::move(labels));
}

Poset Poset::chain(std::size_t k) {
  std::vector<VertexSet> less(k, VertexSet(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) less[i].insert(j);
  return from_relation(std::move(less));
}

Poset Poset::antichain(std::size_t k) { return from_relation(std::vector<VertexSet>(k, VertexSet(k))); }

std::vector<std::pair<std::size_t, std::size_t>> Poset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    above_[a].for_each([&](std::size_t b) {
      // a < b is a cover iff nothing lies strictly between.
      if (!above_[a].intersects(below_[b])) out.emplace_back(a, b);
    });
  return out;
}

Poset Poset::induced(const std::vector<std::size_t>& vertices) const {
  const std::size_t k = vertices.size();
  std::vector<VertexSet> rel(k, VertexSet(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (less(vertices[i], vertices[j])) rel[i].insert(j);
  std::vector<std::int64_t> labels;
  if (has_labels())
    for (std::size_t v : vertices) labels.push_back(labels_[v]);
  return from_relation(std::move(rel), std::move(labels));
}

Poset element_poset(const Group& g) {
  const Digraph orientation = transitive_orientation(g);
  const std::size_t n = g.order();
  std::vector<VertexSet> less(n, VertexSet(n));
  for (auto [x, y] : orientation.arcs()) less[y].insert(x);
  return Poset::from_relation(std::move(less));
}

Poset labeled_cyclic_poset(const CyclicPoset& cyclic) {
  const std::size_t k = cyclic.size();
  std::vector<VertexSet> less(k, VertexSet(k));
  std::vector<std::int64_t> labels(k);
  for (std::size_t j = 0; j < k; ++j) {
    labels[j] = static_cast<std::int64_t>(cyclic.subgroups[j].size);
    cyclic.below[j].for_each([&](std::size_t i) { less[i].insert(j); });
  }
  return Poset::from_relation(std::move(less), std::move(labels));
}

Graph comparability_graph(const Poset& p) {
  Graph g(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) p.above(x).for_each([&](std::size_t y) { g.add_edge(x, y); });
  return g;
}

namespace {

// How an outside vertex y sees s: all above, all below, all incomparable,
// or split.
bool sees_uniformly(const Poset& p, const VertexSet& s, std::size_t y) {
  const VertexSet& up = p.above(y);
  const VertexSet& down = p.below(y);
  std::size_t k = s.count();
  std::size_t n_up = (s & up).count();    // members above y
  std::size_t n_down = (s & down).count();  // members below y
  return n_up == k || n_down == k || (n_up == 0 && n_down == 0);
}

}  // namespace

bool is_homogeneous(const Poset& p, const VertexSet& s) {
  return is_homogeneous(p, s, VertexSet::full(p.size()));
}

bool is_homogeneous(const Poset& p, const VertexSet& s, const VertexSet& within) {
  const VertexSet outside = within - s;
  for (std::size_t y = outside.first(); y < p.size(); y = outside.next(y + 1))
    if (!sees_uniformly(p, s, y)) return false;
  return true;
}

VertexSet homogeneous_closure(const Poset& p, VertexSet seed) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (seed.contains(y) || sees_uniformly(p, seed, y)) continue;
      seed.insert(y);
      changed = true;
    }
  }
  return seed;
}

bool is_chain(const Poset& p, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t x) {
    VertexSet others = s - p.above(x) - p.below(x);
    others.erase(x);
    if (!others.empty()) ok = false;
  });
  return ok;
}

bool is_antichain(const Poset& p, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t x) {
    if (s.intersects(p.above(x))) ok = false;
  });
  return ok;
}

namespace {

// A larger homogeneous set V of the requested shape exists iff for some z
// outside s the smallest homogeneous set containing s + z has that shape
// (it is contained in V, and shapes are inherited by subsets).
template <typename ShapeFn>
bool is_maximal_homogeneous(const Poset& p, const VertexSet& s, ShapeFn&& has_shape) {
  if (s.empty() || !has_shape(s) || !is_homogeneous(p, s)) return false;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (s.contains(z)) continue;
    VertexSet seed = s;
    seed.insert(z);
    if (has_shape(homogeneous_closure(p, std::move(seed)))) return false;
  }
  return true;
}

}  // namespace

bool is_maximal_homogeneous_chain(const Poset& p, const VertexSet& s) {
  return is_maximal_homogeneous(p, s, [&](const VertexSet& v) { return is_chain(p, v); });
}

bool is_maximal_homogeneous_antichain(const Poset& p, const VertexSet& s) {
  return is_maximal_homogeneous(p, s, [&](const VertexSet& v) { return is_antichain(p, v); });
}

Quotient quotient(const Poset& p, const HomogeneousPartition& part) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& b : part) {
    if (b.empty()) throw PosetError("partition has an empty block");
    auto sorted = b;
    std::sort(sorted.begin(), sorted.end());
    blocks.push_back(std::move(sorted));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<std::size_t> block_of(n, n);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t v : blocks[i]) {
      if (v >= n) throw PosetError("partition vertex out of range");
      if (block_of[v] != n) throw PosetError("partition blocks overlap at " + std::to_string(v));
      block_of[v] = i;
    }
  for (std::size_t v = 0; v < n; ++v)
    if (block_of[v] == n) throw PosetError("partition does not cover vertex " + std::to_string(v));

  std::vector<VertexSet> members;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    VertexSet s(n);
    for (std::size_t v : blocks[i]) s.insert(v);
    for (std::size_t y = 0; y < n; ++y)
      if (!s.contains(y) && !sees_uniformly(p, s, y)) throw HomogeneityError(i, y);
    members.push_back(std::move(s));
  }

  const std::size_t k = blocks.size();
  std::vector<VertexSet> less(k, VertexSet(k));
  std::vector<std::int64_t> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = static_cast<std::int64_t>(blocks[i].size());
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && p.less(blocks[i].front(), blocks[j].front())) less[i].insert(j);
  }
  return Quotient{Poset::from_relation(std::move(less), std::move(labels)), std::move(blocks)};
}

LexSum lexicographic_sum(const LexSumSpec& spec) {
  const std::size_t outer = spec.outer.size();
  if (spec.inner.size() != outer) throw PosetError("lexicographic sum needs one inner poset per outer vertex");
  LexSum result;
  std::vector<std::size_t> offset(outer + 1, 0);
  for (std::size_t x = 0; x < outer; ++x) {
    offset[x + 1] = offset[x] + spec.inner[x].size();
    for (std::size_t y = 0; y < spec.inner[x].size(); ++y) result.vertices.emplace_back(x, y);
  }
  const std::size_t n = offset[outer];
  std::vector<VertexSet> less(n, VertexSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    auto [x1, y1] = result.vertices[a];
    for (std::size_t b = 0; b < n; ++b) {
      auto [x2, y2] = result.vertices[b];
      if ((x1 == x2 && spec.inner[x1].less(y1, y2)) || spec.outer.less(x1, x2)) less[a].insert(b);
    }
  }
  result.poset = Poset::from_relation(std::move(less));
  return result;
}

LexProduct generalized_lex_product(const Graph& h, const std::vector<Graph>& family) {
  const std::size_t outer = h.size();
  if (family.size() != outer) throw std::invalid_argument("lexicographic product needs one graph per vertex");
  LexProduct result;
  for (std::size_t v = 0; v < outer; ++v)
    for (std::size_t w = 0; w < family[v].size(); ++w) result.vertices.emplace_back(v, w);
  const std::size_t n = result.vertices.size();
  result.graph = Graph(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto [v1, w1] = result.vertices[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      auto [v2, w2] = result.vertices[b];
      if (h.adjacent(v1, v2) || (v1 == v2 && family[v1].adjacent(w1, w2))) result.graph.add_edge(a, b);
    }
  }
  return result;
}

StructureReport verify_structure_theorem(const Group& g) {
  StructureReport report;
  const CyclicPoset cyclic = cyclic_subgroup_poset(g);
  report.subgroup_graph = comparability_graph(labeled_cyclic_poset(cyclic));

  std::vector<Graph> family;
  bool sizes_ok = true;
  for (const auto& c : cyclic.subgroups) {
    std::size_t phi = arith::totient(c.size);
    report.inner_sizes.push_back(phi);
    if (c.gens.size() != phi) sizes_ok = false;
    family.push_back(Graph::complete(phi));
  }
  if (!sizes_ok) return report;
  const LexProduct product = generalized_lex_product(report.subgroup_graph, family);

  const std::size_t n = g.order();
  if (product.vertices.size() != n) return report;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < product.vertices.size(); ++i) index.emplace(product.vertices[i], i);

  std::vector<std::size_t> image(n);
  VertexSet hit(n);
  for (ElementId x = 0; x < n; ++x) {
    const std::size_t c = cyclic.subgroup_of[x];
    const auto& gens = cyclic.subgroups[c].gens;
    const std::size_t rank =
        static_cast<std::size_t>(std::lower_bound(gens.begin(), gens.end(), x) - gens.begin());
    report.bijection.emplace_back(c, rank);
    auto it = index.find({c, rank});
    if (it == index.end() || hit.contains(it->second)) return report;
    image[x] = it->second;
    hit.insert(it->second);
  }

  const Graph pg = power_graph(g);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (pg.adjacent(x, y) != product.graph.adjacent(image[x], image[y])) return report;
  report.holds = true;
  return report;
}

namespace {

// Joint color refinement of two posets so colors are comparable across them.
// Initial color: (height, label, |up|, |down|).
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors(const Poset& a, const Poset& b) {
  auto heights = [](const Poset& p) {
    std::vector<std::size_t> h(p.size(), 0);
    // Longest chain below; relax until stable (at most |P| rounds).
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < p.size(); ++x)
        p.below(x).for_each([&](std::size_t y) {
          if (h[y] + 1 > h[x]) {
            h[x] = h[y] + 1;
            changed = true;
          }
        });
    }
    return h;
  };
  const Poset* ps[2] = {&a, &b};
  std::vector<std::size_t> color[2];
  using Sig = std::tuple<std::size_t, std::int64_t, std::size_t, std::size_t>;
  std::map<Sig, std::size_t> ids;
  std::vector<Sig> sigs[2];
  for (int s = 0; s < 2; ++s) {
    auto h = heights(*ps[s]);
    for (std::size_t x = 0; x < ps[s]->size(); ++x)
      sigs[s].emplace_back(h[x], ps[s]->label(x), ps[s]->above(x).count(), ps[s]->below(x).count());
  }
  for (int s = 0; s < 2; ++s)
    for (const auto& sig : sigs[s]) ids.emplace(sig, 0);
  std::size_t next = 0;
  for (auto& [sig, id] : ids) id = next++;
  for (int s = 0; s < 2; ++s)
    for (const auto& sig : sigs[s]) color[s].push_back(ids.at(sig));

  std::size_t classes = ids.size();
  while (true) {
    using RSig = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
    std::map<RSig, std::size_t> rids;
    std::vector<RSig> rs[2];
    for (int s = 0; s < 2; ++s)
      for (std::size_t x = 0; x < ps[s]->size(); ++x) {
        std::vector<std::size_t> up, down;
        ps[s]->above(x).for_each([&](std::size_t y) { up.push_back(color[s][y]); });
        ps[s]->below(x).for_each([&](std::size_t y) { down.push_back(color[s][y]); });
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        rs[s].emplace_back(color[s][x], std::move(up), std::move(down));
      }
    for (int s = 0; s < 2; ++s)
      for (const auto& r : rs[s]) rids.emplace(r, 0);
    next = 0;
    for (auto& [r, id] : rids) id = next++;
    for (int s = 0; s < 2; ++s)
      for (std::size_t x = 0; x < rs[s].size(); ++x) color[s][x] = rids.at(rs[s][x]);
    if (rids.size() == classes) break;
    classes = rids.size();
  }
  return {std::move(color[0]), std::move(color[1])};
}

class PosetIsoSearch {
 public:
  PosetIsoSearch(const Poset& a, const Poset& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), map_(a.size(), a.size()), used_(b.size()) {
    // Bottom-up by height level: colors already encode height, so sort by
    // color class size (rarest first), then by index for determinism.
    std::map<std::size_t, std::size_t> freq;
    for (auto c : ca_) ++freq[c];
    order_.resize(a.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return freq[ca_[x]] < freq[ca_[y]]; });
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t t = 0; t < b_.size(); ++t) {
      if (used_.contains(t) || cb_[t] != ca_[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t u = order_[d], s = map_[u];
        ok = a_.less(u, v) == b_.less(s, t) && a_.less(v, u) == b_.less(t, s);
      }
      if (!ok) continue;
      map_[v] = t;
      used_.insert(t);
      if (extend(depth + 1)) return true;
      used_.erase(t);
      map_[v] = a_.size();
    }
    return false;
  }

  const Poset& a_;
  const Poset& b_;
  std::vector<std::size_t> ca_, cb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  VertexSet used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> labeled_poset_iso(const Poset& p1, const Poset& p2, std::size_t cap) {
  if (p1.size() > cap || p2.size() > cap)
    throw SizeCapError("poset isomorphism: more than " + std::to_string(cap) + " vertices");
  if (!p1.has_labels() || !p2.has_labels())
    throw std::invalid_argument("labeled_poset_iso needs labels on both posets");
  if (p1.size() != p2.size()) return std::nullopt;
  auto [c1, c2] = refine_colors(p1, p2);
  auto s1 = c1, s2 = c2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  return PosetIsoSearch(p1, p2, std::move(c1), std::move(c2)).run();
}

bool power_graph_iso(const Group& g1, const Group& g2, std::size_t cap) {
  if (g1.order() != g2.order()) return false;
  return labeled_poset_iso(labeled_cyclic_poset(cyclic_subgroup_poset(g1)),
                           labeled_cyclic_poset(cyclic_subgroup_poset(g2)), cap)
      .has_value();
}

}  // namespace powergraph
