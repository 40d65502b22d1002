#include "powergraph/group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "powergraph/arith.hpp"

namespace powergraph {

namespace {

std::string describe_witness(const std::vector<std::uint64_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

void check_cap(std::uint64_t order, const BuildOptions& options, const std::string& what) {
  if (order > options.max_order)
    throw GroupBuildError(what + " has order " + std::to_string(order) +
                          ", above the order cap " + std::to_string(options.max_order));
}

// Multiplies with overflow saturation; only used for cap checks.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::string power_name(const std::string& base, std::uint64_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace

GroupAxiomError::GroupAxiomError(std::string axiom, std::vector<std::uint64_t> witness)
    : std::runtime_error("not a group: " + axiom + " fails" +
                         (witness.empty() ? std::string() : " at " + describe_witness(witness))),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

Group Group::from_table(const std::vector<std::vector<std::uint64_t>>& table,
                        std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupAxiomError("nonempty", {});
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw GroupBuildError("table row " + std::to_string(a) + " has " +
                            std::to_string(table[a].size()) + " entries, expected " +
                            std::to_string(n));
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n) throw GroupAxiomError("closure", {a, b, table[a][b]});
  }
  auto op = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(table[a][b]); };

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = op(c, a) == a && op(a, c) == a;
    if (ok) e = c;
  }
  if (e == n) throw GroupAxiomError("identity", {});

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = op(a, b) == e && op(b, a) == e;
    if (!found) throw GroupAxiomError("inverse", {a});
  }

  // Light's associativity test: it suffices to check (x g) y = x (g y) for g
  // ranging over a generating set of the magma.
  std::vector<std::size_t> generators;
  {
    VertexSet seen(n);
    std::vector<std::size_t> members;
    auto absorb = [&](std::size_t start) {
      std::vector<std::size_t> queue{start};
      seen.insert(start);
      members.push_back(start);
      while (!queue.empty()) {
        std::size_t z = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < members.size(); ++i) {
          for (std::size_t prod : {op(z, members[i]), op(members[i], z)}) {
            if (!seen.contains(prod)) {
              seen.insert(prod);
              members.push_back(prod);
              queue.push_back(prod);
            }
          }
        }
      }
    };
    for (std::size_t a = 0; a < n; ++a) {
      if (seen.contains(a)) continue;
      generators.push_back(a);
      absorb(a);
    }
  }
  for (std::size_t g : generators)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (op(op(x, g), y) != op(x, op(g, y))) throw GroupAxiomError("associativity", {x, g, y});

  // Renumber: identity first, everything else keeps relative order.
  std::vector<ElementId> to_new(n);
  to_new[e] = 0;
  for (std::size_t a = 0, next = 1; a < n; ++a)
    if (a != e) to_new[a] = static_cast<ElementId>(next++);

  if (names.empty()) {
    names.resize(n);
    for (std::size_t a = 0; a < n; ++a) names[a] = std::to_string(a);
  } else if (names.size() != n) {
    throw GroupBuildError("element name count does not match table size");
  }

  Group g;
  g.n_ = n;
  g.table_.assign(n * n, 0);
  g.names_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    g.names_[to_new[a]] = std::move(names[a]);
    for (std::size_t b = 0; b < n; ++b)
      g.table_[std::size_t{to_new[a]} * n + to_new[b]] = to_new[op(a, b)];
  }

  g.inverse_.assign(n, 0);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) {
        g.inverse_[a] = b;
        break;
      }

  g.order_.assign(n, 0);
  g.cyclic_.assign(n, VertexSet(n));
  for (ElementId x = 0; x < n; ++x) {
    ElementId cur = x;
    std::uint64_t k = 1;
    g.cyclic_[x].insert(x);
    while (cur != 0) {
      cur = g.mul(cur, x);
      g.cyclic_[x].insert(cur);
      ++k;
    }
    g.order_[x] = k;
  }
  return g;
}

ElementId Group::power(ElementId a, std::uint64_t k) const {
  k %= order_[a];
  ElementId result = 0;
  ElementId base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

bool Group::is_abelian() const {
  for (ElementId a = 0; a < n_; ++a)
    for (ElementId b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Group::is_cyclic() const {
  return std::any_of(order_.begin(), order_.end(), [&](std::uint64_t o) { return o == n_; });
}

std::vector<ElementId> Group::involutions() const {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < n_; ++a)
    if (order_[a] == 2) out.push_back(a);
  return out;
}

// ---------------------------------------------------------------------------
// Families

Group make_cyclic(std::uint64_t n, const BuildOptions& options) {
  if (n < 1) throw GroupBuildError("Z(n) needs n >= 1");
  check_cap(n, options, "Z(" + std::to_string(n) + ")");
  std::vector<std::vector<std::uint64_t>> t(n, std::vector<std::uint64_t>(n));
  std::vector<std::string> names(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : power_name("g", a);
    for (std::uint64_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return Group::from_table(t, std::move(names));
}

Group make_dihedral(std::uint64_t n, const BuildOptions& options) {
  if (n < 1) throw GroupBuildError("D(n) needs n >= 1");
  check_cap(saturating_mul(2, n), options, "D(" + std::to_string(n) + ")");
  // r^i s^j has index i + n*j.
  const std::uint64_t order = 2 * n;
  std::vector<std::vector<std::uint64_t>> t(order, std::vector<std::uint64_t>(order));
  std::vector<std::string> names(order);
  for (std::uint64_t x = 0; x < order; ++x) {
    std::uint64_t i = x % n, j = x / n;
    names[x] = x == 0 ? "e" : power_name("r", i) + (j ? "s" : "");
    for (std::uint64_t y = 0; y < order; ++y) {
      std::uint64_t c = y % n, d = y / n;
      std::uint64_t rot = j == 0 ? (i + c) % n : (i + n - c) % n;
      t[x][y] = rot + n * ((j + d) % 2);
    }
  }
  return Group::from_table(t, std::move(names));
}

Group make_quaternion(std::uint64_t order, const BuildOptions& options) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw GroupBuildError("Q(n) needs n = 2^m with m >= 3");
  check_cap(order, options, "Q(" + std::to_string(order) + ")");
  // Dicyclic presentation: a^(2k) = e, x^2 = a^k, x a x^-1 = a^-1, with
  // a^i x^j at index i + 2k*j.
  const std::uint64_t two_k = order / 2, k = order / 4;
  std::vector<std::vector<std::uint64_t>> t(order, std::vector<std::uint64_t>(order));
  std::vector<std::string> names(order);
  for (std::uint64_t x = 0; x < order; ++x) {
    std::uint64_t i = x % two_k, j = x / two_k;
    names[x] = x == 0 ? "e" : power_name("a", i) + (j ? "x" : "");
    for (std::uint64_t y = 0; y < order; ++y) {
      std::uint64_t c = y % two_k, d = y / two_k;
      if (j == 0) {
        t[x][y] = (i + c) % two_k + two_k * d;
      } else if (d == 0) {
        t[x][y] = (i + two_k - c) % two_k + two_k;
      } else {
        t[x][y] = (i + two_k - c + k) % two_k;
      }
    }
  }
  return Group::from_table(t, std::move(names));
}

namespace {

std::string cycle_name(const std::vector<std::size_t>& perm) {
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (done[s] || perm[s] == s) continue;
    out += "(";
    std::size_t c = s;
    bool first = true;
    while (!done[c]) {
      done[c] = true;
      if (!first) out += " ";
      out += std::to_string(c + 1);
      first = false;
      c = perm[c];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

bool is_even(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

// Permutations of {0..n-1} in lexicographic order, filtered; product is
// composition (s t)(i) = s(t(i)).
Group permutation_group(std::uint64_t n, bool even_only) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do {
    if (!even_only || is_even(perm)) perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<std::vector<std::size_t>, std::uint64_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);

  const std::size_t m = perms.size();
  std::vector<std::vector<std::uint64_t>> t(m, std::vector<std::uint64_t>(m));
  std::vector<std::string> names(m);
  std::vector<std::size_t> comp(n);
  for (std::size_t a = 0; a < m; ++a) {
    names[a] = cycle_name(perms[a]);
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      t[a][b] = index.at(comp);
    }
  }
  return Group::from_table(t, std::move(names));
}

std::uint64_t factorial_saturating(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f = saturating_mul(f, i);
  return f;
}

}  // namespace

Group make_symmetric(std::uint64_t n, const BuildOptions& options) {
  if (n < 1) throw GroupBuildError("S(n) needs n >= 1");
  check_cap(factorial_saturating(n), options, "S(" + std::to_string(n) + ")");
  return permutation_group(n, false);
}

Group make_alternating(std::uint64_t n, const BuildOptions& options) {
  if (n < 1) throw GroupBuildError("A(n) needs n >= 1");
  std::uint64_t f = factorial_saturating(n);
  check_cap(n >= 2 ? f / 2 : 1, options, "A(" + std::to_string(n) + ")");
  return permutation_group(n, true);
}

Group make_elementary_abelian(std::uint64_t p, std::uint64_t k, const BuildOptions& options) {
  if (!arith::is_prime(p) || k < 1) throw GroupBuildError("E(p,k) needs p prime and k >= 1");
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < k; ++i) order = saturating_mul(order, p);
  check_cap(order, options, "E(" + std::to_string(p) + "," + std::to_string(k) + ")");
  // Index = sum d_i p^i with digits d_i in [0, p).
  std::vector<std::vector<std::uint64_t>> t(order, std::vector<std::uint64_t>(order));
  std::vector<std::string> names(order);
  for (std::uint64_t a = 0; a < order; ++a) {
    std::string name = "(";
    for (std::uint64_t i = 0, r = a; i < k; ++i, r /= p) name += (i ? "," : "") + std::to_string(r % p);
    names[a] = a == 0 ? "e" : name + ")";
    for (std::uint64_t b = 0; b < order; ++b) {
      std::uint64_t sum = 0, place = 1, x = a, y = b;
      for (std::uint64_t i = 0; i < k; ++i, place *= p, x /= p, y /= p)
        sum += ((x % p + y % p) % p) * place;
      t[a][b] = sum;
    }
  }
  return Group::from_table(t, std::move(names));
}

Group direct_product(const Group& g, const Group& h, const BuildOptions& options) {
  const std::uint64_t n = g.order(), m = h.order();
  check_cap(saturating_mul(n, m), options, "direct product");
  const std::uint64_t order = n * m;
  std::vector<std::vector<std::uint64_t>> t(order, std::vector<std::uint64_t>(order));
  std::vector<std::string> names(order);
  for (std::uint64_t x = 0; x < order; ++x) {
    auto a = static_cast<ElementId>(x / m), b = static_cast<ElementId>(x % m);
    names[x] = x == 0 ? "e" : "(" + g.name(a) + "," + h.name(b) + ")";
    for (std::uint64_t y = 0; y < order; ++y) {
      auto c = static_cast<ElementId>(y / m), d = static_cast<ElementId>(y % m);
      t[x][y] = std::uint64_t{g.mul(a, c)} * m + h.mul(b, d);
    }
  }
  return Group::from_table(t, std::move(names));
}

// ---------------------------------------------------------------------------
// Cayley table files

Group read_cayley_table(std::istream& in, const BuildOptions& options) {
  std::int64_t n = 0;
  if (!(in >> n)) throw GroupBuildError("cayley table: missing order on line 1");
  if (n <= 0) throw GroupBuildError("cayley table: order must be positive");
  check_cap(static_cast<std::uint64_t>(n), options, "cayley table");
  std::vector<std::vector<std::uint64_t>> t(n, std::vector<std::uint64_t>(n));
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) {
      std::int64_t v = 0;
      if (!(in >> v))
        throw GroupBuildError("cayley table: expected " + std::to_string(n * n) +
                              " entries, got " + std::to_string(a * n + b));
      if (v < 0) throw GroupAxiomError("closure", {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)});
      t[a][b] = static_cast<std::uint64_t>(v);
    }
  std::string extra;
  if (in >> extra) throw GroupBuildError("cayley table: trailing data after " + std::to_string(n) + " rows");
  return Group::from_table(t);
}

Group load_cayley_table(const std::string& path, const BuildOptions& options) {
  std::ifstream in(path);
  if (!in) throw GroupBuildError("cannot open cayley table file '" + path + "'");
  return read_cayley_table(in, options);
}

void write_cayley_table(std::ostream& out, const Group& g) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
}

Group build_group(const GroupSpec& spec, const BuildOptions& options) {
  using Kind = GroupSpec::Kind;
  switch (spec.kind) {
    case Kind::kCyclic: return make_cyclic(spec.param, options);
    case Kind::kDihedral: return make_dihedral(spec.param, options);
    case Kind::kQuaternion: return make_quaternion(spec.param, options);
    case Kind::kSymmetric: return make_symmetric(spec.param, options);
    case Kind::kAlternating: return make_alternating(spec.param, options);
    case Kind::kElementaryAbelian: return make_elementary_abelian(spec.param, spec.param2, options);
    case Kind::kTable: return load_cayley_table(spec.path, options);
    case Kind::kProduct: {
      Group lhs = build_group(spec.operands.at(0), options);
      Group rhs = build_group(spec.operands.at(1), options);
      return direct_product(lhs, rhs, options);
    }
  }
  throw GroupBuildError("unknown group spec kind");
}

Group build_group(std::string_view spec_text, const BuildOptions& options) {
  return build_group(parse_group_spec(spec_text), options);
}

// ---------------------------------------------------------------------------
// Queries

std::uint64_t element_order(const Group& g, ElementId x) { return g.element_order(x); }

std::vector<ElementId> generator_class(const Group& g, ElementId x) {
  const std::uint64_t o = g.element_order(x);
  std::vector<ElementId> out;
  for (std::uint64_t k = 1; k <= o; ++k)
    if (std::gcd(k, o) == 1) out.push_back(g.power(x, k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> CyclicPoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < size(); ++j) {
    below[j].for_each([&](std::size_t i) {
      bool covered = true;
      below[j].for_each([&](std::size_t k) {
        if (k != i && below[k].contains(i)) covered = false;
      });
      if (covered) out.emplace_back(i, j);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

CyclicPoset cyclic_subgroup_poset(const Group& g) {
  const std::size_t n = g.order();
  CyclicPoset poset;
  poset.subgroup_of.assign(n, n);

  std::vector<CyclicSubgroup> found;
  std::vector<std::size_t> provisional(n, n);
  for (ElementId x = 0; x < n; ++x) {
    if (provisional[x] != n) continue;
    CyclicSubgroup c;
    c.gens = generator_class(g, x);
    c.generator = c.gens.front();
    c.members = g.cyclic_subgroup(x);
    c.size = c.members.count();
    for (ElementId y : c.gens) provisional[y] = found.size();
    found.push_back(std::move(c));
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].size != found[b].size) return found[a].size < found[b].size;
    return found[a].generator < found[b].generator;
  });
  std::vector<std::size_t> rank(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;
  for (std::size_t idx : perm) poset.subgroups.push_back(std::move(found[idx]));
  for (ElementId x = 0; x < n; ++x) poset.subgroup_of[x] = rank[provisional[x]];

  const std::size_t k = poset.subgroups.size();
  poset.below.assign(k, VertexSet(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i)
      if (i != j && poset.subgroups[j].members.contains(poset.subgroups[i].generator))
        poset.below[j].insert(i);
  return poset;
}

GeneratorPartition generator_partition(const CyclicPoset& poset) {
  GeneratorPartition out;
  out.reserve(poset.size());
  for (const auto& c : poset.subgroups) out.push_back(c.gens);
  return out;
}

std::vector<ElementId> maximal_involutions(const Group& g) {
  const std::size_t n = g.order();
  std::vector<ElementId> out;
  for (ElementId w : g.involutions()) {
    bool maximal = true;
    for (ElementId y = 0; y < n && maximal; ++y)
      if (g.element_order(y) > 2 && g.cyclic_subgroup(y).contains(w)) maximal = false;
    if (maximal) out.push_back(w);
  }
  return out;
}

EulerSum euler_sum_check(const Group& g) {
  EulerSum r;
  for (const auto& c : cyclic_subgroup_poset(g).subgroups) r.sum += arith::totient(c.size);
  r.holds = r.sum == g.order();
  return r;
}

std::map<std::uint64_t, std::size_t> order_histogram(const Group& g) {
  std::map<std::uint64_t, std::size_t> h;
  for (ElementId a = 0; a < g.order(); ++a) ++h[g.element_order(a)];
  return h;
}

}  // namespace powergraph
