#include "powergraph/metric_dim.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "powergraph/arith.hpp"
#include "powergraph/poset.hpp"
#include "powergraph/power_graph.hpp"

namespace powergraph {

const char* to_string(TwinKind kind) {
  switch (kind) {
    case TwinKind::kSingleton: return "singleton";
    case TwinKind::kClique: return "clique";
    case TwinKind::kIndependent: return "independent";
  }
  return "?";
}

TwinPartition twin_partition(const Group& g) { return twin_partition(g, power_graph(g)); }

TwinPartition twin_partition(const Group& g, const Graph& pg) {
  const std::size_t n = g.order();
  std::vector<VertexSet> closed;
  closed.reserve(n);
  for (std::size_t x = 0; x < n; ++x) closed.push_back(neighborhoods(pg, x).closed);

  TwinPartition tp;
  tp.class_of.assign(n, n);
  for (ElementId x = 0; x < n; ++x) {
    if (tp.class_of[x] != n) continue;
    TwinClass cls;
    cls.members.push_back(x);
    tp.class_of[x] = tp.classes.size();
    for (ElementId y = x + 1; y < n; ++y) {
      if (tp.class_of[y] != n) continue;
      if (pg.neighbors(x) == pg.neighbors(y) || closed[x] == closed[y]) {
        cls.members.push_back(y);
        tp.class_of[y] = tp.classes.size();
      }
    }
    if (cls.members.size() == 1)
      cls.kind = TwinKind::kSingleton;
    else
      cls.kind = pg.adjacent(cls.members[0], cls.members[1]) ? TwinKind::kClique : TwinKind::kIndependent;
    tp.classes.push_back(std::move(cls));
  }
  return tp;
}

std::vector<std::uint64_t> twin_partition_cyclic_closedform(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::uint64_t> sizes;
  if (arith::is_prime_power(n)) {
    sizes.push_back(n);
    return sizes;
  }
  for (std::uint64_t d : arith::divisors(n))
    if (d != 1 && d != n) sizes.push_back(arith::totient(d));
  sizes.push_back(1 + arith::totient(n));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

namespace {

VertexSet as_set(std::size_t n, const std::vector<ElementId>& members) {
  VertexSet s(n);
  for (ElementId x : members) s.insert(x);
  return s;
}

std::string describe(const Group& g, const std::vector<ElementId>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? ", " : "") + g.name(members[i]);
  return s + "}";
}

bool is_generalized_quaternion(const Group& g) {
  const std::size_t n = g.order();
  return n >= 8 && (n & (n - 1)) == 0 && !g.is_cyclic() && g.involutions().size() == 1;
}

}  // namespace

ClassStructureReport class_structure_check(const Group& g, const TwinPartition& tp) {
  ClassStructureReport report;
  auto fail = [&](std::string msg) {
    report.holds = false;
    report.failures.push_back(std::move(msg));
  };
  const std::size_t n = g.order();
  const CyclicPoset cp = cyclic_subgroup_poset(g);
  const bool cyclic = g.is_cyclic();

  // Every generator class sits inside one twin class.
  for (const auto& c : cp.subgroups)
    for (ElementId y : c.gens)
      if (tp.class_of[y] != tp.class_of[c.generator])
        fail("generator class of " + g.name(c.generator) + " is split across twin classes");

  const std::size_t e_class = tp.class_of[0];
  {
    std::vector<ElementId> expected;
    if (cyclic && arith::is_prime_power(n)) {
      for (ElementId x = 0; x < n; ++x) expected.push_back(x);
    } else if (cyclic) {
      expected.push_back(0);
      for (ElementId x = 0; x < n; ++x)
        if (g.element_order(x) == n) expected.push_back(x);
    } else if (is_generalized_quaternion(g)) {
      expected = {0, g.involutions().front()};
    } else {
      expected = {0};
    }
    std::sort(expected.begin(), expected.end());
    if (tp.classes[e_class].members != expected)
      fail("identity class " + describe(g, tp.classes[e_class].members) + ", expected " + describe(g, expected));
  }

  const std::vector<ElementId> max_inv = maximal_involutions(g);
  std::optional<Poset> element_order_poset;
  if (!cyclic) element_order_poset = element_poset(g);

  for (std::size_t ci = 0; ci < tp.size(); ++ci) {
    const TwinClass& cls = tp.classes[ci];
    const std::string name = describe(g, cls.members);

    if (cls.kind == TwinKind::kClique && ci != e_class) {
      std::set<std::size_t> subgroup_ids;
      for (ElementId x : cls.members) subgroup_ids.insert(cp.subgroup_of[x]);
      std::vector<std::size_t> chain(subgroup_ids.begin(), subgroup_ids.end());  // ascending size
      std::vector<ElementId> gens_union;
      for (std::size_t s : chain)
        gens_union.insert(gens_union.end(), cp.subgroups[s].gens.begin(), cp.subgroups[s].gens.end());
      std::sort(gens_union.begin(), gens_union.end());
      if (gens_union != cls.members) fail("clique class " + name + " is not a union of generator classes");
      if (chain.size() > 1) {
        auto f = arith::factorize(cp.subgroups[chain.front()].size);
        bool ok = f.size() == 1;
        for (std::size_t i = 0; ok && i < chain.size(); ++i) {
          std::uint64_t expected_size = 1;
          for (unsigned k = 0; k < f[0].second + i; ++k) expected_size *= f[0].first;
          ok = cp.subgroups[chain[i]].size == expected_size &&
               (i == 0 || cp.strictly_contains(chain[i], chain[i - 1]));
        }
        if (!ok) fail("clique class " + name + " is not a nested prime-power chain of generator classes");
      }
    }

    if (cls.kind == TwinKind::kIndependent && cls.members != max_inv)
      fail("independent class " + name + " differs from the maximal involutions");

    if (!cyclic) {
      const VertexSet s = as_set(n, cls.members);
      const Poset& lp = *element_order_poset;
      if (cls.kind == TwinKind::kClique && !is_maximal_homogeneous_chain(lp, s))
        fail("clique class " + name + " is not a maximal homogeneous chain");
      if (cls.kind == TwinKind::kIndependent && !is_maximal_homogeneous_antichain(lp, s))
        fail("independent class " + name + " is not a maximal homogeneous antichain");
      if (cls.kind == TwinKind::kSingleton &&
          !(is_maximal_homogeneous_chain(lp, s) && is_maximal_homogeneous_antichain(lp, s)))
        fail("singleton class " + name + " is not both a maximal homogeneous chain and antichain");
    }
  }
  return report;
}

std::vector<ResolvingInvolutionWitness> resolving_involutions(const Group& g) {
  const Graph pg = power_graph(g);
  return resolving_involutions(g, pg, twin_partition(g, pg));
}

std::vector<ResolvingInvolutionWitness> resolving_involutions(const Group& g, const Graph& pg,
                                                              const TwinPartition& tp) {
  const std::size_t n = g.order();
  std::map<ElementId, std::vector<std::pair<ElementId, ElementId>>> found;
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x + 1; y < n; ++y) {
      // R{x,y} minus {x,y} is where the adjacency rows differ.
      VertexSet extra = pg.neighbors(x) ^ pg.neighbors(y);
      extra.erase(x);
      extra.erase(y);
      const std::size_t w = extra.first();
      if (w == n || extra.next(w + 1) != n) continue;
      if (g.element_order(static_cast<ElementId>(w)) != 2) continue;
      if (tp.class_containing(static_cast<ElementId>(w)).members.size() != 1) continue;
      found[static_cast<ElementId>(w)].emplace_back(x, y);
    }
  std::vector<ResolvingInvolutionWitness> out;
  for (auto& [w, pairs] : found) out.push_back({w, std::move(pairs)});
  return out;
}

unsigned resolving_involutions_cyclic_closedform(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  auto f = arith::factorize(n);
  if (f.size() != 2 || f[0].first != 2) return 0;
  // n = 2^a p^b: resolving iff a = 1 (2p^m) or b = 1 (2^m p).
  return (f[0].second == 1 || f[1].second == 1) ? 1U : 0U;
}

bool resolving_involution_characterization(const Group& g, ElementId w) {
  if (g.is_cyclic()) throw std::invalid_argument("characterization applies to noncyclic groups only");
  if (g.element_order(w) != 2) throw std::invalid_argument("w must be an involution");
  const std::size_t n = g.order();
  const Poset lp = element_poset(g);
  VertexSet within = VertexSet::full(n);
  within.erase(w);
  const CyclicPoset cp = cyclic_subgroup_poset(g);
  for (const auto& c : cp.subgroups) {
    if (!c.members.contains(w)) continue;
    auto f = arith::factorize(c.size);
    bool shape = f.size() == 2 && f[0] == std::pair<std::uint64_t, unsigned>{2, 1} && f[1].first % 2 == 1;
    if (!shape) continue;
    VertexSet s = c.members;
    s.erase(0);
    s.erase(w);
    if (is_homogeneous(lp, s, within)) return true;
  }
  return false;
}

PsiReport psi_membership(const Group& g) {
  PsiReport r;
  r.cyclic = g.is_cyclic();
  const std::size_t n = g.order();
  auto f = arith::factorize(n);
  if (f.size() != 2 || f[0].first != 2) {
    r.failures.push_back("C1");
    return r;
  }
  const std::uint64_t p = f[1].first;
  r.p = p;

  const CyclicPoset cp = cyclic_subgroup_poset(g);
  std::size_t order_p = 0;
  for (const auto& c : cp.subgroups) order_p += c.size == p ? 1 : 0;
  if (order_p != 1) r.failures.push_back("C2");

  bool has_order_four = false;
  for (ElementId x = 0; x < n; ++x) has_order_four = has_order_four || g.element_order(x) == 4;
  if (has_order_four) r.failures.push_back("C3");

  bool c4 = true;
  for (ElementId w : g.involutions()) {
    bool inside = false;
    for (const auto& c : cp.subgroups) inside = inside || (c.size == 2 * p && c.members.contains(w));
    c4 = c4 && inside;
  }
  if (!c4) r.failures.push_back("C4");

  r.member = !r.cyclic && r.failures.empty();
  return r;
}

bool psi_characterization_separating(const Group& g) {
  if (g.is_cyclic()) throw std::invalid_argument("characterization applies to noncyclic groups only");
  const std::size_t n = g.order();
  const Graph pg = power_graph(g);
  const std::vector<ElementId> max_inv = maximal_involutions(g);
  const VertexSet max_inv_set = as_set(n, max_inv);
  for (ElementId x = 1; x < n; ++x) {
    const VertexSet r = separating_set(pg, 0, x);
    VertexSet rest = r;
    rest.erase(0);
    rest.erase(x);
    bool all_involutions = true;
    std::size_t non_maximal = 0;
    rest.for_each([&](std::size_t z) {
      if (g.element_order(static_cast<ElementId>(z)) != 2) all_involutions = false;
      else if (!max_inv_set.contains(z)) ++non_maximal;
    });
    const std::size_t bound = std::max<std::size_t>(r.count(), 4);
    if (all_involutions && non_maximal >= bound - 3) return true;
  }
  return false;
}

DimReport dim_formula(const Group& g, bool verify, const oracle::SearchBudget& budget) {
  DimReport report;
  const Graph pg = power_graph(g);
  const TwinPartition tp = twin_partition(g, pg);
  report.order = g.order();
  report.u_count = tp.size();
  report.w = resolving_involutions(g, pg, tp);
  report.psi = psi_membership(g);
  report.lower_bound = report.order - report.u_count + report.w.size();
  report.dim_formula = report.psi.member ? report.order - report.u_count + 1 : report.lower_bound;
  if (verify) {
    std::vector<std::vector<std::size_t>> classes;
    for (const auto& c : tp.classes) classes.emplace_back(c.members.begin(), c.members.end());
    report.oracle = oracle::brute_force_dim(pg, classes, budget);
  }
  return report;
}

std::uint64_t dim_cyclic_closedform(std::uint64_t n) {
  if (n == 0 || n > arith::kClosedFormCap)
    throw std::invalid_argument("dim_cyclic_closedform: n must be in [1, " + std::to_string(arith::kClosedFormCap) + "]");
  auto f = arith::factorize(n);
  if (f.size() <= 1) return n - 1;
  if (f.size() == 2 && f[0].first == 2 && f[0].second == 1) return n - 2 * f[1].second;
  if (f.size() == 2 && f[0].first == 2 && f[1].second == 1) return n - 2 * f[0].second;
  std::uint64_t prod = 1;
  for (auto [p, r] : f) prod *= (r + 1);
  return n + 1 - prod;
}

std::string dim_report_json(const DimReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["order"] = report.order;
  j["u_count"] = report.u_count;
  j["w"] = ordered_json::array();
  for (const auto& wit : report.w) {
    ordered_json entry;
    entry["w"] = wit.w;
    entry["pairs"] = ordered_json::array();
    for (auto [x, y] : wit.pairs) entry["pairs"].push_back({x, y});
    j["w"].push_back(std::move(entry));
  }
  ordered_json psi;
  psi["member"] = report.psi.member;
  psi["p"] = report.psi.p ? ordered_json(*report.psi.p) : ordered_json(nullptr);
  psi["failures"] = report.psi.failures;
  j["psi"] = std::move(psi);
  j["lower_bound"] = report.lower_bound;
  j["dim_formula"] = report.dim_formula;
  if (report.oracle && report.oracle->status == oracle::SearchStatus::kExact)
    j["dim_oracle"] = report.oracle->dim;
  else
    j["dim_oracle"] = nullptr;
  return j.dump();
}

}  // namespace powergraph
