#include "powergraph/graph.hpp"

#include <cassert>
#include <sstream>

#include <nlohmann/json.hpp>

namespace powergraph {

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  assert(u != v);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = adj_[u].next(u + 1); v < size(); v = adj_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

void Digraph::add_arc(std::size_t u, std::size_t v) {
  assert(u != v);
  out_[u].insert(v);
}

std::size_t Digraph::arc_count() const {
  std::size_t c = 0;
  for (const auto& row : out_) c += row.count();
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Digraph::arcs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) out_[u].for_each([&](std::size_t v) { out.emplace_back(u, v); });
  return out;
}

Graph Digraph::underlying() const {
  Graph g(size());
  for (std::size_t u = 0; u < size(); ++u) out_[u].for_each([&](std::size_t v) { g.add_edge(u, v); });
  return g;
}

bool Digraph::is_subdigraph_of(const Digraph& other) const {
  if (size() != other.size()) return false;
  for (std::size_t u = 0; u < size(); ++u)
    if (!out_[u].is_subset_of(other.out_[u])) return false;
  return true;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string dot_text(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                     const std::vector<std::string>& labels, bool directed) {
  std::ostringstream out;
  out << (directed ? "digraph G {\n" : "graph G {\n");
  for (std::size_t v = 0; v < n; ++v) {
    const std::string label = labels.empty() ? std::to_string(v) : labels.at(v);
    out << "  " << v << " [label=\"" << dot_escape(label) << "\"];\n";
  }
  const char* op = directed ? " -> " : " -- ";
  for (auto [u, v] : edges) out << "  " << u << op << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const Graph& g, const std::vector<std::string>& labels) {
  return dot_text(g.size(), g.edges(), labels, false);
}

std::string export_dot(const Digraph& d, const std::vector<std::string>& labels) {
  return dot_text(d.size(), d.arcs(), labels, true);
}

std::string adjacency_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.size();
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

std::string adjacency_json(const Digraph& d) {
  nlohmann::ordered_json j;
  j["n"] = d.size();
  j["arcs"] = nlohmann::ordered_json::array();
  for (auto [u, v] : d.arcs()) j["arcs"].push_back({u, v});
  return j.dump();
}

}  // namespace powergraph
