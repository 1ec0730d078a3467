#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "outrank/error.hpp"
#include "outrank/promethee.hpp"
#include "outrank/table.hpp"

namespace outrank {

// Pairwise PROMETHEE I verdict, read as "row versus column". Dominated is the
// mirror of Preferred so that every ordered pair carries exactly one verdict.
enum class Verdict : unsigned char {
  Preferred,
  Dominated,
  Indifferent,
  Incomparable,
  Self,
};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Preferred: return "preferred";
    case Verdict::Dominated: return "dominated";
    case Verdict::Indifferent: return "indifferent";
    case Verdict::Incomparable: return "incomparable";
    case Verdict::Self: return "self";
  }
  return "?";
}

struct OutrankingRelation {
  std::vector<std::string> alternatives;
  BasicTable<Verdict> verdicts;

  std::size_t size() const noexcept { return alternatives.size(); }
  Verdict operator()(std::size_t i, std::size_t j) const { return verdicts(i, j); }
};

inline OutrankingRelation promethee_i_relation(const FlowResult& f) {
  const std::size_t n = f.size();
  OutrankingRelation rel{f.alternatives, BasicTable<Verdict>(n, n, Verdict::Self)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double pi = f.phi_plus[i], pj = f.phi_plus[j];
      const double mi = f.phi_minus[i], mj = f.phi_minus[j];
      Verdict v;
      if (pi == pj && mi == mj) {
        v = Verdict::Indifferent;
      } else if (pi >= pj && mi <= mj) {
        v = Verdict::Preferred;
      } else if (pj >= pi && mj <= mi) {
        v = Verdict::Dominated;
      } else {
        v = Verdict::Incomparable;
      }
      rel.verdicts(i, j) = v;
    }
  }
  return rel;
}

/// Directed graph over alternatives as an adjacency matrix.
struct Digraph {
  std::vector<std::string> nodes;
  BasicTable<unsigned char> adjacency;

  explicit Digraph(std::vector<std::string> labels = {})
      : nodes(std::move(labels)), adjacency(nodes.size(), nodes.size(), 0) {}

  std::size_t size() const noexcept { return nodes.size(); }
  bool has_edge(std::size_t u, std::size_t v) const { return adjacency(u, v) != 0; }
  void add_edge(std::size_t u, std::size_t v) { adjacency(u, v) = 1; }
  void remove_edge(std::size_t u, std::size_t v) { adjacency(u, v) = 0; }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v = 0; v < size(); ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }
};

/// Kahn ordering; nullopt when the graph has a cycle.
inline std::optional<std::vector<std::size_t>> topological_order(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (g.has_edge(u, v)) ++indegree[v];

  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t v = n; v-- > 0;)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    const std::size_t u = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (std::size_t v = n; v-- > 0;) {
      if (g.has_edge(u, v) && --indegree[v] == 0) ready.push_back(v);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

/// reach(u, v) != 0 iff a directed path of length >= 1 leads from u to v.
/// Requires an acyclic graph.
inline BasicTable<unsigned char> reachability(const Digraph& g) {
  const auto order = topological_order(g);
  if (!order) throw Error(ErrorKind::InvalidInput, "reachability: graph has a cycle");
  const std::size_t n = g.size();
  BasicTable<unsigned char> reach(n, n, 0);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    const std::size_t u = *it;
    for (std::size_t v = 0; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      reach(u, v) = 1;
      for (std::size_t w = 0; w < n; ++w)
        if (reach(v, w)) reach(u, w) = 1;
    }
  }
  return reach;
}

inline Digraph build_digraph(const OutrankingRelation& rel) {
  Digraph g(rel.alternatives);
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < rel.size(); ++j)
      if (rel(i, j) == Verdict::Preferred) g.add_edge(i, j);
  if (!topological_order(g)) {
    throw Error(ErrorKind::InternalInvariant,
                "outranking relation produced a cycle");
  }
  return g;
}

// Keeps edge u->v only when no other successor of u reaches v. For a DAG the
// result is the unique minimal graph with the same reachability.
inline Digraph transitive_reduction(const Digraph& g) {
  if (!topological_order(g)) {
    throw Error(ErrorKind::InvalidInput, "transitive_reduction: graph has a cycle");
  }
  const auto reach = reachability(g);
  Digraph out = g;
  const std::size_t n = g.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (w != v && g.has_edge(u, w) && reach(w, v)) {
          out.remove_edge(u, v);
          break;
        }
      }
    }
  }
  return out;
}

/// Longest-path layer of every node, sources at depth 0.
inline std::vector<std::size_t> depths(const Digraph& g) {
  const auto order = topological_order(g);
  if (!order) throw Error(ErrorKind::InvalidInput, "depths: graph has a cycle");
  std::vector<std::size_t> depth(g.size(), 0);
  for (std::size_t u : *order)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.has_edge(u, v)) depth[v] = std::max(depth[v], depth[u] + 1);
  return depth;
}

struct DotOptions {
  // Keep only nodes whose layer is < max_depth (the top of the graph).
  std::optional<std::size_t> max_depth;
  std::string graph_name = "outranking";
};

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// Covering Preferred edges are solid arrows; Indifferent pairs are dashed
// undirected links. Nodes are labeled with the id and net flow (4 decimals).
inline std::string to_dot(const OutrankingRelation& rel, const FlowResult& f,
                          const DotOptions& options = {}) {
  const Digraph reduced = transitive_reduction(build_digraph(rel));
  const auto depth = depths(reduced);
  std::vector<bool> keep(rel.size(), true);
  if (options.max_depth) {
    for (std::size_t i = 0; i < rel.size(); ++i) keep[i] = depth[i] < *options.max_depth;
  }

  std::ostringstream os;
  os << "digraph " << options.graph_name << " {\n";
  os << "  rankdir=TB;\n  node [shape=box];\n";
  char buf[64];
  for (std::size_t i = 0; i < rel.size(); ++i) {
    if (!keep[i]) continue;
    std::snprintf(buf, sizeof buf, "%.4f", f.phi_net[i]);
    os << "  n" << i << " [label=\"" << detail::dot_escape(rel.alternatives[i])
       << "\\n" << buf << "\"];\n";
  }
  for (const auto& [u, v] : reduced.edges()) {
    if (keep[u] && keep[v]) os << "  n" << u << " -> n" << v << ";\n";
  }
  for (std::size_t i = 0; i < rel.size(); ++i) {
    for (std::size_t j = i + 1; j < rel.size(); ++j) {
      if (rel(i, j) == Verdict::Indifferent && keep[i] && keep[j]) {
        os << "  n" << i << " -> n" << j << " [dir=none, style=dashed];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace outrank
