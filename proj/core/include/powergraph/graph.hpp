#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/vertex_set.hpp"

namespace powergraph {

/// Simple undirected graph with dense adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  static Graph complete(std::size_t n);

  std::size_t size() const { return adj_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  std::size_t edge_count() const;
  /// Edges (i, j) with i < j, lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

/// Simple directed graph (no loops) with dense successor rows.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n, VertexSet(n)) {}

  std::size_t size() const { return out_.size(); }
  void add_arc(std::size_t u, std::size_t v);
  bool has_arc(std::size_t u, std::size_t v) const { return out_[u].contains(v); }
  const VertexSet& successors(std::size_t v) const { return out_[v]; }
  std::size_t arc_count() const;
  /// Arcs (u, v), lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const;

  /// Underlying undirected graph.
  Graph underlying() const;
  /// True when every arc of *this is an arc of `other`.
  bool is_subdigraph_of(const Digraph& other) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<VertexSet> out_;
};

/// Byte-stable DOT text: vertices in index order, edges sorted. `labels`
/// may be empty (indices are used) or hold one name per vertex.
std::string export_dot(const Graph& g, const std::vector<std::string>& labels = {});
std::string export_dot(const Digraph& d, const std::vector<std::string>& labels = {});

/// `{"n": int, "edges": [[i,j],...]}` with i < j, sorted.
std::string adjacency_json(const Graph& g);
/// `{"n": int, "arcs": [[u,v],...]}`, sorted.
std::string adjacency_json(const Digraph& d);

}  // namespace powergraph
