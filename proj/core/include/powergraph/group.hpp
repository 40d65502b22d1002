#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "powergraph/group_spec.hpp"
#include "powergraph/vertex_set.hpp"

namespace powergraph {

/// Index of a group element. After construction the identity is always 0.
using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 2048;

/// A multiplication table that is not a group. `witness` holds the offending
/// elements in the numbering of the input table: (a, b, a*b) for closure,
/// (a) for a missing inverse, (x, g, y) for a non-associative triple, empty
/// when no identity exists.
class GroupAxiomError : public std::runtime_error {
 public:
  GroupAxiomError(std::string axiom, std::vector<std::uint64_t> witness);
  const std::string& axiom() const { return axiom_; }
  const std::vector<std::uint64_t>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::uint64_t> witness_;
};

/// Construction failures other than axiom violations: order cap, unreadable
/// or malformed table files.
class GroupBuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite group stored as an explicit Cayley table with cached inverses,
/// element orders and cyclic subgroups. Immutable after construction.
class Group {
 public:
  /// Validates closure, identity, inverses and associativity, then renumbers
  /// so the identity is element 0 (other elements keep their relative
  /// order). `names` are per input element; defaults to the input index.
  static Group from_table(const std::vector<std::vector<std::uint64_t>>& table,
                          std::vector<std::string> names = {});

  std::size_t order() const { return n_; }
  static constexpr ElementId identity() { return 0; }

  ElementId mul(ElementId a, ElementId b) const { return table_[std::size_t{a} * n_ + b]; }
  ElementId inverse(ElementId a) const { return inverse_[a]; }
  std::uint64_t element_order(ElementId a) const { return order_[a]; }
  ElementId power(ElementId a, std::uint64_t k) const;

  /// Members of <x>.
  const VertexSet& cyclic_subgroup(ElementId x) const { return cyclic_[x]; }

  const std::string& name(ElementId a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  bool is_abelian() const;
  bool is_cyclic() const;
  std::vector<ElementId> involutions() const;

 private:
  Group() = default;

  std::size_t n_ = 0;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint64_t> order_;
  std::vector<VertexSet> cyclic_;
  std::vector<std::string> names_;
};

struct BuildOptions {
  std::size_t max_order = kDefaultMaxOrder;
};

Group build_group(const GroupSpec& spec, const BuildOptions& options = {});

/// Convenience: parse then build.
Group build_group(std::string_view spec_text, const BuildOptions& options = {});

// Built-in families. Each throws GroupBuildError when the order exceeds the cap.
Group make_cyclic(std::uint64_t n, const BuildOptions& options = {});
Group make_dihedral(std::uint64_t n, const BuildOptions& options = {});
Group make_quaternion(std::uint64_t order, const BuildOptions& options = {});
Group make_symmetric(std::uint64_t n, const BuildOptions& options = {});
Group make_alternating(std::uint64_t n, const BuildOptions& options = {});
Group make_elementary_abelian(std::uint64_t p, std::uint64_t k, const BuildOptions& options = {});
/// Element (a, b) gets index a * |H| + b.
Group direct_product(const Group& g, const Group& h, const BuildOptions& options = {});

/// Cayley table text: line 1 is n, then n rows of n whitespace-separated
/// 0-based indices (row a, column b holds a*b).
Group read_cayley_table(std::istream& in, const BuildOptions& options = {});
Group load_cayley_table(const std::string& path, const BuildOptions& options = {});
void write_cayley_table(std::ostream& out, const Group& g);

/// Least k >= 1 with x^k = e.
std::uint64_t element_order(const Group& g, ElementId x);

/// [x]: every y with <y> = <x>, ascending.
std::vector<ElementId> generator_class(const Group& g, ElementId x);

/// A cyclic subgroup <x>. `generator` is the least element generating it.
struct CyclicSubgroup {
  ElementId generator = 0;
  VertexSet members;
  std::vector<ElementId> gens;  // ascending
  std::size_t size = 0;
};

/// Cyclic subgroups ordered by inclusion, labeled by order.
///
/// Subgroups are sorted by (size, generator), which is a linear extension of
/// inclusion. `below[j]` holds every i with C_i strictly contained in C_j.
struct CyclicPoset {
  std::vector<CyclicSubgroup> subgroups;
  std::vector<std::size_t> subgroup_of;  // element -> index of <x>
  std::vector<VertexSet> below;

  std::size_t size() const { return subgroups.size(); }
  bool strictly_contains(std::size_t outer, std::size_t inner) const {
    return below[outer].contains(inner);
  }
  /// Covering pairs (i, j): C_i is a maximal proper cyclic subgroup of C_j.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
};

CyclicPoset cyclic_subgroup_poset(const Group& g);

/// The generator classes [x] in CyclicPoset order; each class ascending.
/// This ascending order is the fixed intra-class ordering used everywhere.
using GeneratorPartition = std::vector<std::vector<ElementId>>;
GeneratorPartition generator_partition(const CyclicPoset& poset);

/// Involutions whose cyclic subgroup is maximal among all cyclic subgroups.
std::vector<ElementId> maximal_involutions(const Group& g);

struct EulerSum {
  std::uint64_t sum = 0;
  bool holds = false;
};
/// Sum of phi(|C|) over all cyclic subgroups C, compared with |G|.
EulerSum euler_sum_check(const Group& g);

/// Element order -> number of elements with that order.
std::map<std::uint64_t, std::size_t> order_histogram(const Group& g);

}  // namespace powergraph
