#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/graph.hpp"
#include "powergraph/group.hpp"
#include "powergraph/oracle.hpp"

namespace powergraph {

enum class TwinKind { kSingleton, kClique, kIndependent };

const char* to_string(TwinKind kind);

struct TwinClass {
  std::vector<ElementId> members;  // ascending
  TwinKind kind = TwinKind::kSingleton;
};

/// Classes of x ~ y iff N(x) = N(y) or N[x] = N[y] in the power graph,
/// ordered by least member.
struct TwinPartition {
  std::vector<TwinClass> classes;
  std::vector<std::size_t> class_of;  // element -> class index

  std::size_t size() const { return classes.size(); }
  const TwinClass& class_containing(ElementId x) const { return classes[class_of[x]]; }
};

TwinPartition twin_partition(const Group& g);
TwinPartition twin_partition(const Group& g, const Graph& power_graph);

/// Twin class sizes of the cyclic group of order n, descending: {n} for a
/// prime power, otherwise phi(d) for each divisor 1 < d < n plus 1 + phi(n)
/// for the identity merged with the generators.
std::vector<std::uint64_t> twin_partition_cyclic_closedform(std::uint64_t n);

struct ClassStructureReport {
  bool holds = true;
  std::vector<std::string> failures;
};

/// Checks the known shapes of twin classes: clique classes other than the
/// identity's are one generator class or a nested p-power chain of them;
/// independent classes with two or more members are exactly the maximal
/// involutions; for noncyclic groups, clique classes of size >= 2 are
/// maximal homogeneous chains of the element poset and singleton classes
/// are both maximal homogeneous chains and antichains.
ClassStructureReport class_structure_check(const Group& g, const TwinPartition& tp);

struct ResolvingInvolutionWitness {
  ElementId w = 0;
  std::vector<std::pair<ElementId, ElementId>> pairs;  // x < y, R{x,y} = {x,y,w}
};

/// Exhaustive search over pairs: involutions w with singleton twin class
/// for which some x, y outside that class have R{x,y} = {x,y,w}. Sorted by w;
/// every witness pair is recorded.
std::vector<ResolvingInvolutionWitness> resolving_involutions(const Group& g);
std::vector<ResolvingInvolutionWitness> resolving_involutions(const Group& g, const Graph& power_graph,
                                                              const TwinPartition& tp);

/// 1 when n = 2p^m or n = 2^m p (p odd prime, m >= 1), else 0.
unsigned resolving_involutions_cyclic_closedform(std::uint64_t n);

/// For a noncyclic group and an involution w: some cyclic subgroup C of order
/// 2p^m (p odd prime) contains w and C minus <w> is homogeneous in the element
/// poset restricted to G minus w. Throws std::invalid_argument for cyclic G
/// or when w is not an involution.
bool resolving_involution_characterization(const Group& g, ElementId w);

struct PsiReport {
  bool member = false;
  bool cyclic = false;
  std::optional<std::uint64_t> p;     // the odd prime of C1 when it applies
  std::vector<std::string> failures;  // subset of "C1".."C4"
};

/// Membership in the family where the dimension formula gains +1: G
/// noncyclic and, for an odd prime p, (C1) the prime divisors of |G| are 2
/// and p, (C2) the subgroup of order p is unique, (C3) no element has order
/// 4, (C4) every involution lies in a cyclic subgroup of order 2p.
PsiReport psi_membership(const Group& g);

/// Independent route to the same family: some x != e has every element of
/// R{e,x} minus {e,x} an involution, with at least r - 3 of them non-maximal
/// where r = max(|R{e,x}|, 4). Throws std::invalid_argument for cyclic G.
bool psi_characterization_separating(const Group& g);

struct DimReport {
  std::size_t order = 0;
  std::size_t u_count = 0;
  std::vector<ResolvingInvolutionWitness> w;
  PsiReport psi;
  std::size_t lower_bound = 0;  // |G| - |U| + |W|
  std::size_t dim_formula = 0;
  std::optional<oracle::DimSearchResult> oracle;

  /// Oracle ran to completion and agrees with the formula.
  bool oracle_matches() const {
    return oracle && oracle->status == oracle::SearchStatus::kExact && oracle->dim == dim_formula;
  }
};

/// Closed-form metric dimension of the power graph: |G| - |U| + 1 for the
/// family above, |G| - |U| + |W| otherwise. With `verify`, also runs the
/// brute-force oracle under `budget`; an exhausted budget is recorded in the
/// oracle result and the formula value is still returned.
DimReport dim_formula(const Group& g, bool verify = false,
                      const oracle::SearchBudget& budget = oracle::SearchBudget::for_dimension());

/// Metric dimension of the power graph of Z_n from the prime factorization
/// n = p1^r1 ... pt^rt (p1 < ... < pt): n - 1 if t = 1; n - 2 r2 if
/// (t, p1, r1) = (2, 2, 1); n - 2 r1 if (t, p1, r2) = (2, 2, 1); else
/// n + 1 - prod(ri + 1). Throws std::invalid_argument for n = 0 or n above
/// arith::kClosedFormCap.
std::uint64_t dim_cyclic_closedform(std::uint64_t n);

/// `{"order":..,"u_count":..,"w":[..],"psi":{..},"lower_bound":..,"dim_formula":..,"dim_oracle":..}`
/// dim_oracle is null when the oracle did not run or was inconclusive.
std::string dim_report_json(const DimReport& report);

}  // namespace powergraph
