#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twotree/degseq.hpp"
#include "twotree/error.hpp"
#include "twotree/graph.hpp"
#include "twotree/recognizer.hpp"

namespace twotree {

struct TreeRealization {
  SimpleGraph tree;
  Vertex ell_vertex = 0;
  Vertex k_vertex = 0;
};

/// Vertex pair with the requested degrees and the 2-tree that holds them.
struct MarkedRealization {
  SimpleGraph graph;
  Vertex ell_vertex = 0;
  Vertex k_vertex = 0;
};

namespace detail {

/// Caterpillar realization of a tree sequence: vertices are numbered in
/// ascending degree order, the non-leaves form a spine and leaves fill the
/// remaining degree. Each leaf placement is one step of the leaf-absorption
/// induction run in reverse.
inline SimpleGraph caterpillar(const DegreeSequence& d) {
  const std::vector<Value> deg = d.elements();
  const auto n = static_cast<Vertex>(deg.size());
  SimpleGraph t(n);
  if (n == 2) {
    t.add_edge(0, 1);
    return t;
  }
  Vertex first_inner = 0;
  while (first_inner < n && deg[first_inner] == 1) ++first_inner;
  for (Vertex v = first_inner; v + 1 < n; ++v) t.add_edge(v, v + 1);
  Vertex leaf = 0;
  for (Vertex v = first_inner; v < n; ++v) {
    while (static_cast<Value>(t.degree(v)) < deg[v]) t.add_edge(v, leaf++);
  }
  if (leaf != first_inner) throw Error(Errc::internal, "caterpillar leaf count mismatch");
  return t;
}

/// Two distinct vertices with degrees a and b (a first).
inline std::pair<Vertex, Vertex> pick_pair(const SimpleGraph& g, Value a, Value b) {
  std::optional<Vertex> va;
  std::optional<Vertex> vb;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto dv = static_cast<Value>(g.degree(v));
    if (!va && dv == a) {
      va = v;
    } else if (!vb && dv == b) {
      vb = v;
    }
    if (va && vb) break;
  }
  if (!va || !vb) throw Error(Errc::internal, "marked degrees not found in realization");
  return {*va, *vb};
}

}  // namespace detail

/// Makes `root` adjacent to `target` in a tree without changing any degree.
/// Roots the tree at `root`, then swaps the subtree hanging from `target`
/// with the subtree of a child of `root` that does not contain `target`.
/// Requires deg(root) >= 2 and root, target not already adjacent.
inline void exchange_subtrees(SimpleGraph& tree, Vertex root, Vertex target) {
  const std::size_t n = tree.vertex_count();
  if (root == target || tree.has_edge(root, target)) return;
  std::vector<Vertex> parent(n, root);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : tree.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  Vertex branch = target;
  while (parent[branch] != root) branch = parent[branch];
  std::optional<Vertex> other;
  for (Vertex c : tree.neighbors(root)) {
    if (c != branch) {
      other = c;
      break;
    }
  }
  if (!other) throw Error(Errc::internal, "subtree exchange needs a root of degree at least 2");
  const Vertex p = parent[target];
  tree.remove_edge(root, *other);
  tree.remove_edge(p, target);
  tree.add_edge(p, *other);
  tree.add_edge(root, target);
}

/// Tree realizing d with a degree-ell vertex adjacent to a degree-k vertex.
/// When ell == k the two are distinct occurrences.
inline TreeRealization realize_tree(const DegreeSequence& d, Value ell, Value k) {
  if (!recognize_tree(d)) {
    throw Error(Errc::wrong_sum, "not a tree sequence: sum must be 2n-2 over n >= 1 positive elements");
  }
  if (d.multiplicity(ell) == 0) throw Error(Errc::value_not_in_sequence, std::to_string(ell) + " is not in the sequence");
  if (d.multiplicity(k) == 0) throw Error(Errc::value_not_in_sequence, std::to_string(k) + " is not in the sequence");
  if (ell == k && d.multiplicity(ell) < 2) {
    throw Error(Errc::need_two_occurrences, "adjacent equal degrees need two occurrences of " + std::to_string(ell));
  }
  if (d.size() > 2 && ell == 1 && k == 1) throw Error(Errc::both_leaves, "two leaves cannot be adjacent when n > 2");

  TreeRealization out;
  out.tree = detail::caterpillar(d);
  auto [vl, vk] = detail::pick_pair(out.tree, ell, k);
  if (!out.tree.has_edge(vl, vk)) {
    // Root at the higher-degree end; it has at least two children.
    if (ell <= k) {
      exchange_subtrees(out.tree, vk, vl);
    } else {
      exchange_subtrees(out.tree, vl, vk);
    }
  }
  out.ell_vertex = vl;
  out.k_vertex = vk;
  return out;
}

/// 2-tree realizing d (containing n - 1) with a degree-ell vertex adjacent to
/// a degree-k vertex: realize the residual tree sequence and add an apex.
inline MarkedRealization realize_with_dominating(const DegreeSequence& d, Value ell, Value k) {
  const std::int64_t n = d.size();
  if (d.empty()) throw Error(Errc::empty_sequence, "empty sequence");
  if (d.min() < 2) throw Error(Errc::min_below_two, "elements must be at least 2");
  if (d.sum() != 4 * n - 6) throw Error(Errc::wrong_sum, "sum must be 4n-6");
  if (d.multiplicity(n - 1) == 0) throw Error(Errc::no_dominating_value, "n-1 is not in the sequence");
  if (d.multiplicity(ell) == 0) throw Error(Errc::value_not_in_sequence, std::to_string(ell) + " is not in the sequence");
  if (d.multiplicity(k) == 0) throw Error(Errc::value_not_in_sequence, std::to_string(k) + " is not in the sequence");
  if (ell == k && d.multiplicity(ell) < 2) {
    throw Error(Errc::need_two_occurrences, "adjacent equal degrees need two occurrences of " + std::to_string(ell));
  }
  if (n > 3 && ell == 2 && k == 2) throw Error(Errc::both_twos, "two degree-2 vertices cannot be adjacent when n > 3");

  if (n == 3) return {triangle(), 0, 1};

  const bool swapped = ell < k;
  const Value hi = swapped ? k : ell;
  const Value lo = swapped ? ell : k;

  std::vector<Run> runs;
  for (const Run& r : d.runs()) runs.push_back({r.value - 1, r.value == n - 1 ? r.count - 1 : r.count});
  const DegreeSequence reduced = DegreeSequence::from_runs(std::move(runs));

  MarkedRealization out;
  Vertex v_hi = 0;
  Vertex v_lo = 0;
  if (hi == n - 1) {
    SimpleGraph t = detail::caterpillar(reduced);
    std::optional<Vertex> pick;
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      if (static_cast<Value>(t.degree(v)) == lo - 1) {
        pick = v;
        break;
      }
    }
    if (!pick) throw Error(Errc::internal, "no tree vertex of the requested degree");
    out.graph = cone(t);
    v_hi = static_cast<Vertex>(t.vertex_count());
    v_lo = *pick;
  } else {
    TreeRealization t = realize_tree(reduced, hi - 1, lo - 1);
    out.graph = cone(t.tree);
    v_hi = t.ell_vertex;
    v_lo = t.k_vertex;
  }
  out.ell_vertex = swapped ? v_lo : v_hi;
  out.k_vertex = swapped ? v_hi : v_lo;
  return out;
}

}  // namespace twotree
