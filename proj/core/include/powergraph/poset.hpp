#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/graph.hpp"
#include "powergraph/group.hpp"
#include "powergraph/vertex_set.hpp"

namespace powergraph {

class PosetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A partition block is not homogeneous: `vertex` sits outside `block` and
/// relates to its members non-uniformly.
class HomogeneityError : public PosetError {
 public:
  HomogeneityError(std::size_t block, std::size_t vertex);
  std::size_t block() const { return block_; }
  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t block_;
  std::size_t vertex_;
};

class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite poset stored as a dense strict-order matrix, with optional integer
/// vertex labels. Construction validates irreflexivity, antisymmetry and
/// transitivity.
class Poset {
 public:
  Poset() = default;

  /// `less[x]` holds every y with x < y.
  static Poset from_relation(std::vector<VertexSet> less, std::vector<std::int64_t> labels = {});
  /// Transitive closure of the given pairs (a, b) meaning a < b.
  static Poset from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                          std::vector<std::int64_t> labels = {});
  static Poset chain(std::size_t k);
  static Poset antichain(std::size_t k);

  std::size_t size() const { return above_.size(); }
  bool less(std::size_t x, std::size_t y) const { return above_[x].contains(y); }
  bool comparable(std::size_t x, std::size_t y) const { return less(x, y) || less(y, x); }
  /// Strict up-set / down-set.
  const VertexSet& above(std::size_t x) const { return above_[x]; }
  const VertexSet& below(std::size_t x) const { return below_[x]; }

  bool has_labels() const { return !labels_.empty(); }
  std::int64_t label(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::int64_t>& labels() const { return labels_; }

  /// Covering pairs (a, b), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  /// Induced subposet on `vertices` (in the given order).
  Poset induced(const std::vector<std::size_t>& vertices) const;

 private:
  std::vector<VertexSet> above_;
  std::vector<VertexSet> below_;
  std::vector<std::int64_t> labels_;
};

/// The element poset of a group: y < x iff the orientation has arc x -> y,
/// using ascending ElementId inside each generator class. Its comparability
/// graph is the power graph.
Poset element_poset(const Group& g);

/// Cyclic subgroups under inclusion, labeled by subgroup order, indexed as
/// in CyclicPoset.
Poset labeled_cyclic_poset(const CyclicPoset& cyclic);

Graph comparability_graph(const Poset& p);

/// Every vertex of `within` outside `s` is above all of s, below all of s or
/// incomparable to all of s. The two-argument form uses the whole poset.
bool is_homogeneous(const Poset& p, const VertexSet& s);
bool is_homogeneous(const Poset& p, const VertexSet& s, const VertexSet& within);

/// Smallest homogeneous set containing `seed`: repeatedly absorb vertices
/// that see the current set non-uniformly.
VertexSet homogeneous_closure(const Poset& p, VertexSet seed);

bool is_chain(const Poset& p, const VertexSet& s);
bool is_antichain(const Poset& p, const VertexSet& s);
/// Homogeneous chain contained in no strictly larger homogeneous chain.
bool is_maximal_homogeneous_chain(const Poset& p, const VertexSet& s);
bool is_maximal_homogeneous_antichain(const Poset& p, const VertexSet& s);

using HomogeneousPartition = std::vector<std::vector<std::size_t>>;

struct Quotient {
  Poset poset;  // labeled by block size
  std::vector<std::vector<std::size_t>> blocks;  // sorted; ordered by least member
};

/// Blocks are ordered by their least member. Throws PosetError when `part`
/// is not a partition and HomogeneityError when a block is not homogeneous.
Quotient quotient(const Poset& p, const HomogeneousPartition& part);

struct LexSumSpec {
  Poset outer;
  std::vector<Poset> inner;  // one per outer vertex
};

struct LexSum {
  Poset poset;
  std::vector<std::pair<std::size_t, std::size_t>> vertices;  // (outer, inner), lexicographic
};

/// (x1,y1) < (x2,y2) iff x1 = x2 and y1 < y2 in Q_x1, or x1 < x2 in P.
LexSum lexicographic_sum(const LexSumSpec& spec);

struct LexProduct {
  Graph graph;
  std::vector<std::pair<std::size_t, std::size_t>> vertices;  // (outer, inner), lexicographic
};

/// Edge {(v1,w1),(v2,w2)} iff {v1,v2} is an edge of h, or v1 = v2 and
/// {w1,w2} is an edge of family[v1].
LexProduct generalized_lex_product(const Graph& h, const std::vector<Graph>& family);

struct StructureReport {
  bool holds = false;
  /// element -> (cyclic subgroup index, rank within its generator class)
  std::vector<std::pair<std::size_t, std::size_t>> bijection;
  std::vector<std::size_t> inner_sizes;  // phi(|C|) per cyclic subgroup
  Graph subgroup_graph;                  // comparability graph of the subgroups
};

/// Builds the product of the subgroup comparability graph with complete
/// graphs of order phi(|C|) and checks that x -> (<x>, rank of x in [x]) is
/// an isomorphism from the power graph onto it.
StructureReport verify_structure_theorem(const Group& g);

inline constexpr std::size_t kDefaultPosetIsoCap = 200;

/// Label-preserving order isomorphism p1 -> p2 (mapping[v] is the image of
/// v), or nullopt. Throws SizeCapError above `cap` vertices and
/// std::invalid_argument when either poset is unlabeled.
std::optional<std::vector<std::size_t>> labeled_poset_iso(const Poset& p1, const Poset& p2,
                                                          std::size_t cap = kDefaultPosetIsoCap);

/// Power graphs are isomorphic iff the labeled cyclic-subgroup posets are.
bool power_graph_iso(const Group& g1, const Group& g2, std::size_t cap = kDefaultPosetIsoCap);

}  // namespace powergraph
