#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twotree/degseq.hpp"
#include "twotree/error.hpp"

namespace twotree {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..vertex_count()-1.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }

  std::size_t degree(Vertex v) const {
    check(v);
    return adj_[v].size();
  }

  /// Scans the shorter of the two adjacency lists.
  bool has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
  }

  Vertex add_vertex() {
    adj_.emplace_back();
    return static_cast<Vertex>(adj_.size() - 1);
  }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw Error(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) throw Error(Errc::duplicate_edge, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edges_;
  }

  void remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    auto iu = std::find(adj_[u].begin(), adj_[u].end(), v);
    if (iu == adj_[u].end()) throw Error(Errc::not_an_edge, std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
    adj_[u].erase(iu);
    adj_[v].erase(std::find(adj_[v].begin(), adj_[v].end(), u));
    --edges_;
  }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void check(Vertex v) const {
    if (v >= adj_.size()) throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range");
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

inline SimpleGraph triangle() {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  return g;
}

/// Attaches `count` new vertices to the edge uv in place; returns the first
/// new vertex (new vertices are consecutive).
inline Vertex attach_ears(SimpleGraph& g, Vertex u, Vertex v, std::size_t count) {
  if (!g.has_edge(u, v)) throw Error(Errc::not_an_edge, std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  const auto first = static_cast<Vertex>(g.vertex_count());
  for (std::size_t i = 0; i < count; ++i) {
    const Vertex x = g.add_vertex();
    g.add_edge(x, u);
    g.add_edge(x, v);
  }
  return first;
}

inline std::pair<SimpleGraph, Vertex> attach_ear(SimpleGraph g, Vertex u, Vertex v) {
  const Vertex x = attach_ears(g, u, v, 1);
  return {std::move(g), x};
}

inline DegreeSequence degree_sequence(const SimpleGraph& g) {
  std::vector<Value> degrees(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) degrees[v] = static_cast<Value>(g.degree(v));
  return DegreeSequence::from_elements(degrees);
}

inline bool is_connected(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

inline bool is_tree(const SimpleGraph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

/// Adds an apex adjacent to every vertex of a tree with at least two
/// vertices. The apex is the last vertex of the result.
inline SimpleGraph cone(const SimpleGraph& tree) {
  if (tree.vertex_count() < 2 || !is_tree(tree)) {
    throw Error(Errc::not_a_tree, "cone needs a tree on at least two vertices");
  }
  SimpleGraph g = tree;
  const Vertex apex = g.add_vertex();
  for (Vertex v = 0; v < apex; ++v) g.add_edge(apex, v);
  return g;
}

struct EarStep {
  Vertex ear;
  Vertex a;
  Vertex b;

  friend bool operator==(const EarStep&, const EarStep&) = default;
};

/// Elimination order of a 2-tree: steps[0] is removed first, and `core` is
/// the triangle left at the end.
struct EarTrace {
  std::vector<EarStep> steps;
  std::array<Vertex, 3> core{};
};

/// Rebuilds the graph by starting from the core triangle and re-attaching the
/// ears in reverse elimination order. Vertex labels are preserved.
inline SimpleGraph replay(const EarTrace& trace, std::size_t vertex_count) {
  SimpleGraph g(vertex_count);
  g.add_edge(trace.core[0], trace.core[1]);
  g.add_edge(trace.core[0], trace.core[2]);
  g.add_edge(trace.core[1], trace.core[2]);
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    if (!g.has_edge(it->a, it->b)) throw Error(Errc::not_an_edge, "ear trace attaches to a missing edge");
    g.add_edge(it->ear, it->a);
    g.add_edge(it->ear, it->b);
  }
  return g;
}

enum class Obstruction {
  none,
  too_small,               // fewer than three vertices
  disconnected,
  wrong_edge_count,        // not 2n - 3 edges
  non_adjacent_neighbors,  // a degree-2 vertex whose neighbours are not adjacent
  low_degree,              // a vertex fell below degree 2 during elimination
  no_ear,                  // elimination got stuck with no degree-2 vertex
};

inline const char* obstruction_name(Obstruction o) {
  switch (o) {
    case Obstruction::none: return "none";
    case Obstruction::too_small: return "fewer than three vertices";
    case Obstruction::disconnected: return "disconnected";
    case Obstruction::wrong_edge_count: return "edge count is not 2n-3";
    case Obstruction::non_adjacent_neighbors: return "degree-2 vertex with non-adjacent neighbours";
    case Obstruction::low_degree: return "vertex of degree below 2";
    case Obstruction::no_ear: return "no degree-2 vertex left";
  }
  return "unknown";
}

struct TwoTreeCheck {
  bool two_tree = false;
  Obstruction obstruction = Obstruction::none;
  EarTrace trace;  // filled only when two_tree

  explicit operator bool() const noexcept { return two_tree; }
};

/// Decides whether g is a 2-tree by greedily eliminating degree-2 vertices.
/// In a 2-tree every degree-2 vertex is an ear and removing it leaves a
/// 2-tree, so the first failure proves g is not one. O(n + m log m).
inline TwoTreeCheck is_two_tree(const SimpleGraph& g) {
  TwoTreeCheck out;
  const std::size_t n = g.vertex_count();
  if (n < 3) {
    out.obstruction = Obstruction::too_small;
    return out;
  }
  if (!is_connected(g)) {
    out.obstruction = Obstruction::disconnected;
    return out;
  }
  if (g.edge_count() != 2 * n - 3) {
    out.obstruction = Obstruction::wrong_edge_count;
    return out;
  }

  // Sorted adjacency for O(log d) edge queries between two hubs.
  std::vector<std::vector<Vertex>> sorted(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    sorted[v].assign(nb.begin(), nb.end());
    std::sort(sorted[v].begin(), sorted[v].end());
  }
  auto adjacent = [&](Vertex a, Vertex b) {
    const auto& s = sorted[a].size() <= sorted[b].size() ? sorted[a] : sorted[b];
    return std::binary_search(s.begin(), s.end(), sorted[a].size() <= sorted[b].size() ? b : a);
  };

  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> work;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = sorted[v].size();
    if (deg[v] == 2) work.push_back(v);
  }

  std::size_t live = n;
  out.trace.steps.reserve(n - 3);
  while (live > 3) {
    if (work.empty()) {
      out.obstruction = Obstruction::no_ear;
      return out;
    }
    const Vertex u = work.back();
    work.pop_back();
    if (removed[u] || deg[u] != 2) continue;

    std::array<Vertex, 2> nb{};
    std::size_t found = 0;
    for (Vertex w : sorted[u]) {
      if (!removed[w]) nb[found++] = w;
      if (found == 2) break;
    }
    if (!adjacent(nb[0], nb[1])) {
      out.obstruction = Obstruction::non_adjacent_neighbors;
      return out;
    }
    removed[u] = 1;
    --live;
    out.trace.steps.push_back({u, nb[0], nb[1]});
    for (Vertex w : nb) {
      --deg[w];
      if (deg[w] < 2) {
        out.obstruction = Obstruction::low_degree;
        return out;
      }
      if (deg[w] == 2) work.push_back(w);
    }
  }

  // 3 live vertices carrying 2*3-3 = 3 live edges form a triangle.
  std::size_t c = 0;
  for (Vertex v = 0; v < n && c < 3; ++v) {
    if (!removed[v]) out.trace.core[c++] = v;
  }
  out.two_tree = true;
  return out;
}

/// A vertex of degree `ell` adjacent to a degree-2 vertex, if any. The caller
/// promises g is a 2-tree (no check).
inline std::optional<Edge> find_ear_witness(const SimpleGraph& g, Value ell) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<Value>(g.degree(v)) != ell) continue;
    for (Vertex w : g.neighbors(v)) {
      if (g.degree(w) == 2) return Edge{v, w};
    }
  }
  return std::nullopt;
}

/// (vertex of degree ell, adjacent ear) in a 2-tree.
inline std::optional<Edge> ear_adjacency_witness(const SimpleGraph& g, Value ell) {
  if (!is_two_tree(g)) throw Error(Errc::not_a_two_tree, "witness query on a graph that is not a 2-tree");
  return find_ear_witness(g, ell);
}

// Edge-list text format: a header line `n m`, then m lines `u v`.

inline void write_edge_list(std::ostream& os, const SimpleGraph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

/// Reads the header and exactly m edge lines; anything after is left unread.
inline SimpleGraph read_edge_list(std::istream& is) {
  auto next_line = [&](std::string& line) {
    while (std::getline(is, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '#') return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line)) throw Error(Errc::parse_error, "edge list: missing header line");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || n < 0 || m < 0 || (hs >> extra)) {
      throw Error(Errc::parse_error, "edge list: malformed header '" + line + "'");
    }
  }
  if (n > static_cast<long long>(UINT32_MAX)) throw Error(Errc::parse_error, "edge list: too many vertices");
  SimpleGraph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) throw Error(Errc::parse_error, "edge list: expected " + std::to_string(m) + " edges");
    std::istringstream es(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra) || u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(Errc::parse_error, "edge list: malformed edge line '" + line + "'");
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

inline void write_dot(std::ostream& os, const SimpleGraph& g) {
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

}  // namespace twotree
