#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powergraph/graph.hpp"

// Brute-force verifiers. They see only a Graph and share no code with the
// closed forms.
namespace powergraph::oracle {

struct SearchBudget {
  std::size_t max_vertices = 48;
  std::uint64_t max_candidates = 20'000'000;
  double max_seconds = 60.0;

  static SearchBudget for_dimension() { return {}; }
  static SearchBudget for_isomorphism() { return {16, 50'000'000, 60.0}; }
};

enum class SearchStatus { kExact, kInconclusive };

/// All-pairs BFS distances; kInfinite marks unreachable pairs.
class DistanceMatrix {
 public:
  static constexpr std::uint8_t kInfinite = 0xFF;
  explicit DistanceMatrix(const Graph& g);
  std::size_t size() const { return n_; }
  std::uint8_t at(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
  std::uint8_t max_finite() const { return max_finite_; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> d_;
  std::uint8_t max_finite_ = 0;
};

/// The distance vectors to `w` are pairwise distinct over all vertices.
bool is_resolving(const Graph& g, const std::vector<std::size_t>& w);
bool is_resolving(const DistanceMatrix& d, const std::vector<std::size_t>& w);

/// Vertices with equal open or equal closed neighborhoods, grouped; classes
/// ordered by least member.
std::vector<std::vector<std::size_t>> twin_classes(const Graph& g);

struct DimSearchResult {
  SearchStatus status = SearchStatus::kInconclusive;
  std::size_t dim = 0;                // valid when exact
  std::vector<std::size_t> witness;   // a resolving set of size dim, ascending
  std::size_t lower_bound = 0;        // every smaller size was ruled out
  std::size_t upper_bound = 0;        // a resolving set of this size is known
  std::uint64_t candidates = 0;
  std::string reason;                 // why the search stopped early
};

/// Exact metric dimension. Any resolving set keeps all but at most one
/// vertex of every twin class, and swapping two twins is an automorphism, so
/// candidates are: each class either complete or missing its largest member.
/// Sizes are tried in ascending order starting from |V| - #classes; among
/// resolving sets of the minimum size the lexicographically least candidate
/// is returned.
DimSearchResult brute_force_dim(const Graph& g, const SearchBudget& budget = SearchBudget::for_dimension());

/// Same search with caller-supplied twin classes. Each class is checked to
/// consist of mutual twins (std::invalid_argument otherwise); vertices not
/// covered become singleton classes.
DimSearchResult brute_force_dim(const Graph& g, const std::vector<std::vector<std::size_t>>& classes,
                                const SearchBudget& budget = SearchBudget::for_dimension());

struct IsoSearchResult {
  SearchStatus status = SearchStatus::kInconclusive;
  std::optional<std::vector<std::size_t>> mapping;  // set when an isomorphism exists
  std::string reason;
};

/// Backtracking graph isomorphism with color-refinement pruning.
IsoSearchResult graph_iso(const Graph& g1, const Graph& g2,
                          const SearchBudget& budget = SearchBudget::for_isomorphism());

}  // namespace powergraph::oracle
