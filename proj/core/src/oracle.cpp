#include "powergraph/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

namespace powergraph::oracle {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.size()), d_(g.size() * g.size(), kInfinite) {
  std::deque<std::size_t> queue;
  for (std::size_t s = 0; s < n_; ++s) {
    std::uint8_t* row = &d_[s * n_];
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](std::size_t v) {
        if (row[v] != kInfinite) return;
        row[v] = static_cast<std::uint8_t>(row[u] + 1);
        max_finite_ = std::max(max_finite_, row[v]);
        queue.push_back(v);
      });
    }
  }
}

bool is_resolving(const Graph& g, const std::vector<std::size_t>& w) {
  return is_resolving(DistanceMatrix(g), w);
}

bool is_resolving(const DistanceMatrix& d, const std::vector<std::size_t>& w) {
  const std::size_t n = d.size();
  if (n <= 1) return true;
  if (w.empty()) return false;
  // Distance vectors packed as base-B integers, B = max distance + 2 so the
  // infinite marker also gets a digit. Power graphs give B = 3.
  const std::uint64_t base = std::uint64_t{d.max_finite()} + 2;
  std::size_t digits_per_word = 0;
  for (std::uint64_t cap = UINT64_MAX; cap >= base; cap /= base) ++digits_per_word;
  const std::size_t words = (w.size() + digits_per_word - 1) / digits_per_word;

  std::vector<std::vector<std::uint64_t>> keys(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint8_t dist = d.at(v, w[i]);
      std::uint64_t digit = dist == DistanceMatrix::kInfinite ? base - 1 : dist;
      auto& word = keys[v][i / digits_per_word];
      word = word * base + digit;
    }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

namespace {

bool are_twins(const Graph& g, std::size_t x, std::size_t y) {
  if (g.neighbors(x) == g.neighbors(y)) return true;
  VertexSet cx = g.neighbors(x), cy = g.neighbors(y);
  cx.insert(x);
  cy.insert(y);
  return cx == cy;
}

class Clock {
 public:
  explicit Clock(double limit) : limit_(limit), start_(std::chrono::steady_clock::now()) {}
  bool expired() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() > limit_;
  }

 private:
  double limit_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::vector<std::vector<std::size_t>> twin_classes(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> placed(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (placed[x]) continue;
    std::vector<std::size_t> cls{x};
    placed[x] = true;
    for (std::size_t y = x + 1; y < n; ++y)
      if (!placed[y] && are_twins(g, x, y)) {
        cls.push_back(y);
        placed[y] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

DimSearchResult brute_force_dim(const Graph& g, const SearchBudget& budget) {
  return brute_force_dim(g, twin_classes(g), budget);
}

DimSearchResult brute_force_dim(const Graph& g, const std::vector<std::vector<std::size_t>>& given,
                                const SearchBudget& budget) {
  const std::size_t n = g.size();
  DimSearchResult result;
  result.upper_bound = n == 0 ? 0 : n - 1;
  if (n > budget.max_vertices) {
    result.reason = "graph has " + std::to_string(n) + " vertices, budget allows " +
                    std::to_string(budget.max_vertices);
    return result;
  }

  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> covered(n, false);
  for (auto cls : given) {
    if (cls.empty()) continue;
    std::sort(cls.begin(), cls.end());
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (cls[i] >= n || covered[cls[i]]) throw std::invalid_argument("twin classes overlap or are out of range");
      covered[cls[i]] = true;
      if (i > 0 && !are_twins(g, cls[0], cls[i]))
        throw std::invalid_argument("vertices " + std::to_string(cls[0]) + " and " + std::to_string(cls[i]) +
                                    " are not twins");
    }
    classes.push_back(std::move(cls));
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!covered[v]) classes.push_back({v});
  std::sort(classes.begin(), classes.end());

  const std::size_t u = classes.size();
  const DistanceMatrix dist(g);
  const Clock clock(budget.max_seconds);

  // `full` marks classes kept complete; the rest drop their largest member.
  auto candidate = [&](const std::vector<bool>& full) {
    std::vector<std::size_t> s;
    for (std::size_t c = 0; c < u; ++c) {
      std::size_t keep = full[c] ? classes[c].size() : classes[c].size() - 1;
      s.insert(s.end(), classes[c].begin(), classes[c].begin() + static_cast<std::ptrdiff_t>(keep));
    }
    std::sort(s.begin(), s.end());
    return s;
  };

  for (std::size_t level = 0; level <= u; ++level) {
    const std::size_t size = n - u + level;
    result.lower_bound = size;
    std::optional<std::vector<std::size_t>> best;
    // Combinations of `level` full classes, in lexicographic order.
    std::vector<std::size_t> pick(level);
    for (std::size_t i = 0; i < level; ++i) pick[i] = i;
    while (true) {
      if (result.candidates >= budget.max_candidates) {
        result.reason = "candidate budget exhausted";
        return result;
      }
      if ((result.candidates & 0x3FF) == 0 && clock.expired()) {
        result.reason = "time budget exhausted";
        return result;
      }
      std::vector<bool> full(u, false);
      for (std::size_t c : pick) full[c] = true;
      auto s = candidate(full);
      ++result.candidates;
      if (is_resolving(dist, s) && (!best || s < *best)) best = std::move(s);

      // Advance to the next combination.
      std::size_t i = level;
      while (i > 0 && pick[i - 1] == u - level + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < level; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (best) {
      result.status = SearchStatus::kExact;
      result.dim = size;
      result.upper_bound = size;
      result.witness = std::move(*best);
      return result;
    }
  }
  result.reason = "no resolving set found";
  return result;
}

namespace {

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Graph& a, const Graph& b) {
  const Graph* gs[2] = {&a, &b};
  std::vector<std::size_t> color[2];
  for (int s = 0; s < 2; ++s)
    for (std::size_t v = 0; v < gs[s]->size(); ++v) color[s].push_back(gs[s]->degree(v));
  std::size_t classes = 0;
  while (true) {
    using Sig = std::pair<std::size_t, std::vector<std::size_t>>;
    std::map<Sig, std::size_t> ids;
    std::vector<Sig> sigs[2];
    for (int s = 0; s < 2; ++s)
      for (std::size_t v = 0; v < gs[s]->size(); ++v) {
        std::vector<std::size_t> nb;
        gs[s]->neighbors(v).for_each([&](std::size_t w) { nb.push_back(color[s][w]); });
        std::sort(nb.begin(), nb.end());
        sigs[s].emplace_back(color[s][v], std::move(nb));
      }
    for (int s = 0; s < 2; ++s)
      for (const auto& sig : sigs[s]) ids.emplace(sig, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int s = 0; s < 2; ++s)
      for (std::size_t v = 0; v < sigs[s].size(); ++v) color[s][v] = ids.at(sigs[s][v]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {std::move(color[0]), std::move(color[1])};
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::vector<std::size_t> ca, std::vector<std::size_t> cb,
            const SearchBudget& budget)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), budget_(budget), clock_(budget.max_seconds),
        map_(a.size(), a.size()), used_(b.size()) {
    // Rarest color first; then prefer vertices adjacent to already placed ones.
    std::map<std::size_t, std::size_t> freq;
    for (auto c : ca_) ++freq[c];
    std::vector<bool> placed(a.size(), false);
    for (std::size_t step = 0; step < a.size(); ++step) {
      std::size_t best = a.size();
      std::tuple<std::size_t, std::size_t> best_key{};
      for (std::size_t v = 0; v < a.size(); ++v) {
        if (placed[v]) continue;
        std::size_t links = 0;
        for (std::size_t u : order_) links += a.adjacent(u, v) ? 1 : 0;
        std::tuple<std::size_t, std::size_t> key{freq[ca_[v]], a.size() - links};
        if (best == a.size() || key < best_key) {
          best = v;
          best_key = key;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  IsoSearchResult run() {
    IsoSearchResult r;
    int outcome = extend(0);
    if (outcome == 1) {
      r.status = SearchStatus::kExact;
      r.mapping = map_;
    } else if (outcome == 0) {
      r.status = SearchStatus::kExact;
    } else {
      r.reason = "search budget exhausted";
    }
    return r;
  }

 private:
  // 1 found, 0 exhausted, -1 out of budget.
  int extend(std::size_t depth) {
    if (depth == order_.size()) return 1;
    if (++nodes_ > budget_.max_candidates) return -1;
    if ((nodes_ & 0xFFF) == 0 && clock_.expired()) return -1;
    const std::size_t v = order_[depth];
    for (std::size_t t = 0; t < b_.size(); ++t) {
      if (used_.contains(t) || cb_[t] != ca_[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d)
        ok = a_.adjacent(order_[d], v) == b_.adjacent(map_[order_[d]], t);
      if (!ok) continue;
      map_[v] = t;
      used_.insert(t);
      int sub = extend(depth + 1);
      if (sub != 0) return sub;
      used_.erase(t);
      map_[v] = a_.size();
    }
    return 0;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::size_t> ca_, cb_;
  SearchBudget budget_;
  Clock clock_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  VertexSet used_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

IsoSearchResult graph_iso(const Graph& g1, const Graph& g2, const SearchBudget& budget) {
  IsoSearchResult r;
  if (g1.size() > budget.max_vertices || g2.size() > budget.max_vertices) {
    r.reason = "graph larger than the isomorphism budget of " + std::to_string(budget.max_vertices) + " vertices";
    return r;
  }
  r.status = SearchStatus::kExact;
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return r;
  auto [c1, c2] = refine(g1, g2);
  auto s1 = c1, s2 = c2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return r;
  return IsoSearch(g1, g2, std::move(c1), std::move(c2), budget).run();
}

}  // namespace powergraph::oracle
