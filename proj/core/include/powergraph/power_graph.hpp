#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "powergraph/graph.hpp"
#include "powergraph/group.hpp"

namespace powergraph {

/// Arc x -> y whenever x != y and y lies in <x>.
Digraph power_digraph(const Group& g);

/// x ~ y whenever x != y and one of them is a power of the other.
Graph power_graph(const Group& g);

/// Position of each element inside its generator class [x]. The default is
/// ascending ElementId, i.e. the rank of x within generator_class(g, x).
std::vector<std::size_t> ascending_class_rank(const Group& g);

/// The orientation induced by the generator-class order: y precedes x when
/// x and y generate the same cyclic subgroup and y has the smaller class
/// rank, or when <y> is a proper subgroup of <x>. Arc x -> y iff y precedes x.
Digraph transitive_orientation(const Group& g);
Digraph transitive_orientation(const Group& g, const std::vector<std::size_t>& class_rank);

/// For all arcs (u,v), (v,w): (u,w) is an arc.
bool is_transitive(const Digraph& d);

/// Distances in a power graph take values in {0, 1, 2}; kUnreachable is never
/// produced for a valid group and exists for the closed-form assertion only.
inline constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();
unsigned distance(const Graph& power_graph, std::size_t x, std::size_t y);

struct Neighborhoods {
  VertexSet open;
  VertexSet closed;
};
Neighborhoods neighborhoods(const Graph& power_graph, std::size_t x);

/// R{x,y}: vertices z with d(x,z) != d(y,z). Throws std::invalid_argument
/// when x == y.
VertexSet separating_set(const Graph& power_graph, std::size_t x, std::size_t y);

struct PerfectionReport {
  std::uint64_t omega = 0;  // heaviest chain of cyclic subgroups, weight phi(|C|)
  std::uint64_t chi = 0;    // colors used by the height coloring
  bool coloring_proper = false;
  bool holds = false;       // chi == omega and the coloring is proper
  std::vector<std::size_t> coloring;  // 1-based height per element
};

/// Clique number via a chain DP on the cyclic-subgroup poset, chromatic
/// number via height (Mirsky) coloring of the element order, checked proper
/// against the power graph.
PerfectionReport perfection_check(const Group& g);

}  // namespace powergraph
