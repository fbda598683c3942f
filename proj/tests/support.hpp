#pragma once

// Brute-force reference implementations shared by the test suites. None of
// them reuse library logic beyond the plain containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "twotree/twotree.hpp"

namespace twotree::reference {

/// Every multiset of n values from [2, n-1] with sum 4n-6 that recognize accepts.
inline std::set<DegreeSequence> accepted_sequences(std::size_t n) {
  std::set<DegreeSequence> out;
  const auto sn = static_cast<Value>(n);
  for (const auto& d : sequences_with_sum(n, 4 * sn - 6, 2, std::max<Value>(2, sn - 1))) {
    if (recognize(d)) out.insert(d);
  }
  return out;
}

/// Degree sequence of every labeled tree on n vertices, by decoding all
/// Pruefer codes. Each tree is reported with its edge set.
inline void for_each_labeled_tree(std::size_t n, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (n == 1) {
    fn({});
    return;
  }
  if (n == 2) {
    fn({{0, 1}});
    return;
  }
  std::vector<int> code(n - 2, 0);
  while (true) {
    std::vector<int> deg(n, 1);
    for (int c : code) ++deg[c];
    std::vector<std::pair<int, int>> edges;
    std::vector<int> d = deg;
    for (int c : code) {
      int leaf = 0;
      while (d[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, c);
      --d[leaf];
      --d[c];
    }
    int a = -1;
    for (int v = 0; v < static_cast<int>(n); ++v) {
      if (d[v] == 1) {
        if (a < 0) {
          a = v;
        } else {
          edges.emplace_back(a, v);
        }
      }
    }
    fn(edges);
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == static_cast<int>(n)) code[i++] = 0;
    if (i == code.size()) break;
  }
}

/// For every tree sequence on n vertices, the set of unordered degree pairs
/// (a <= b) that occur on some edge of some tree realizing it.
inline std::map<DegreeSequence, std::set<std::pair<Value, Value>>> tree_adjacency_table(std::size_t n) {
  std::map<DegreeSequence, std::set<std::pair<Value, Value>>> table;
  for_each_labeled_tree(n, [&](const std::vector<std::pair<int, int>>& edges) {
    std::vector<Value> deg(n, 0);
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    auto& pairs = table[DegreeSequence::from_elements(deg)];
    for (auto [u, v] : edges) pairs.insert({std::min(deg[u], deg[v]), std::max(deg[u], deg[v])});
  });
  return table;
}

/// Peel parameters by exhaustive search: every r and every partner value y,
/// checking on the explicit element list that a copy of n-r-1 survives.
inline bool peel_exists_brute(const DegreeSequence& d, Value x) {
  if (x < 3) return false;
  const auto n = d.size();
  const std::vector<Value> el = d.elements();
  std::set<Value> values(el.begin(), el.end());
  for (Value r = 1; r <= d.multiplicity(2); ++r) {
    for (Value y : values) {
      if (y == x || x - r < 2 || y - r < 2) continue;
      std::vector<Value> rest = el;
      auto take = [&](Value v) {
        auto it = std::find(rest.begin(), rest.end(), v);
        if (it == rest.end()) return false;
        rest.erase(it);
        return true;
      };
      bool ok = take(x) && take(y);
      for (Value i = 0; ok && i < r; ++i) ok = take(2);
      if (!ok) continue;
      rest.push_back(x - r);
      rest.push_back(y - r);
      if (std::count(rest.begin(), rest.end(), n - r - 1) > 0) return true;
    }
  }
  return false;
}

/// Distinct values of d that are at least `lo`.
inline std::vector<Value> values_at_least(const DegreeSequence& d, Value lo) {
  std::vector<Value> out;
  for (const Run& r : d.runs()) {
    if (r.value >= lo) out.push_back(r.value);
  }
  return out;
}

/// All graphs on n vertices with m edges, as edge masks over the upper triangle.
inline void for_each_graph(std::size_t n, std::size_t m, const std::function<void(const SimpleGraph&)>& fn) {
  std::vector<Edge> all;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) all.emplace_back(i, j);
  }
  std::vector<char> pick(all.size(), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), 1);
  do {
    SimpleGraph g(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (pick[i]) g.add_edge(all[i].first, all[i].second);
    }
    fn(g);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

inline SimpleGraph relabel(const SimpleGraph& g, const std::vector<Vertex>& perm) {
  SimpleGraph h(g.vertex_count());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace twotree::reference
