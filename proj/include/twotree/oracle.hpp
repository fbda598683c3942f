#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <thread>
#include <vector>

#include "twotree/degseq.hpp"
#include "twotree/error.hpp"
#include "twotree/graph.hpp"

namespace twotree {

/// Largest order accepted by the exhaustive enumerator. The upper triangle
/// of a 10-vertex adjacency matrix (45 bits) fits in one word; level 10 is
/// 529 graphs and still takes well under a second.
inline constexpr std::size_t kMaxEnumerationOrder = 10;

/// Isomorphism-invariant encoding: the upper triangle of the adjacency
/// matrix read column by column ((0,1), (0,2), (1,2), (0,3), ...), minimized
/// over all vertex orders that list vertices in increasing refined-degree
/// class. The first pair is the most significant bit.
struct CanonicalGraph {
  std::size_t order = 0;
  std::uint64_t code = 0;

  friend auto operator<=>(const CanonicalGraph&, const CanonicalGraph&) = default;

  SimpleGraph to_graph() const {
    SimpleGraph g(order);
    const std::size_t bits = order * (order - 1) / 2;
    std::size_t pos = 0;
    for (Vertex j = 1; j < order; ++j) {
      for (Vertex i = 0; i < j; ++i, ++pos) {
        if ((code >> (bits - 1 - pos)) & 1u) g.add_edge(i, j);
      }
    }
    return g;
  }
};

namespace detail {

/// Exact canonical search: branch over vertex orders block by block,
/// pruning any prefix whose bits already exceed the best code found.
class Canonizer {
 public:
  explicit Canonizer(const SimpleGraph& g) : n_(g.vertex_count()) {
    adj_.assign(n_, std::vector<char>(n_, 0));
    for (const auto& [u, v] : g.edges()) adj_[u][v] = adj_[v][u] = 1;

    // Refined degree class: (degree, sorted neighbour degrees).
    std::vector<std::vector<std::size_t>> key(n_);
    for (Vertex v = 0; v < n_; ++v) {
      key[v].push_back(g.degree(v));
      std::vector<std::size_t> nd;
      for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
      std::sort(nd.begin(), nd.end());
      key[v].insert(key[v].end(), nd.begin(), nd.end());
    }
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
    block_of_pos_.resize(n_);
    std::size_t b = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i > 0 && key[order[i]] != key[order[i - 1]]) ++b;
      block_of_pos_[i] = b;
      block_members_.resize(b + 1);
      block_members_[b].push_back(order[i]);
    }
    bits_ = n_ * (n_ - 1) / 2;
  }

  std::uint64_t run() {
    best_ = ~std::uint64_t{0};
    have_best_ = false;
    placed_.assign(n_, 0);
    used_.assign(n_, 0);
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(std::size_t pos, std::uint64_t prefix, std::size_t nbits) {
    if (pos == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v : block_members_[block_of_pos_[pos]]) {
      if (used_[v]) continue;
      std::uint64_t p = prefix;
      for (std::size_t i = 0; i < pos; ++i) p = (p << 1) | static_cast<std::uint64_t>(adj_[placed_[i]][v]);
      const std::size_t nb = nbits + pos;
      if (have_best_ && nb > 0 && p > (best_ >> (bits_ - nb))) continue;
      used_[v] = 1;
      placed_[pos] = v;
      search(pos + 1, p, nb);
      used_[v] = 0;
    }
  }

  std::size_t n_;
  std::size_t bits_ = 0;
  std::vector<std::vector<char>> adj_;
  std::vector<std::size_t> block_of_pos_;
  std::vector<std::vector<Vertex>> block_members_;
  std::vector<Vertex> placed_;
  std::vector<char> used_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace detail

inline CanonicalGraph canonical_form(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxEnumerationOrder) {
    throw Error(Errc::out_of_bounds, "canonical form limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
  }
  if (g.vertex_count() < 2) return {g.vertex_count(), 0};
  return {g.vertex_count(), detail::Canonizer(g).run()};
}

/// All 2-trees on n vertices up to isomorphism, grown level by level by
/// attaching an ear to every edge of every smaller 2-tree. Parent graphs are
/// split across `threads` workers; the merged set is schedule independent.
inline std::set<CanonicalGraph> enumerate_two_trees(std::size_t n, unsigned threads = 0) {
  if (n < 3 || n > kMaxEnumerationOrder) {
    throw Error(Errc::out_of_bounds, "enumeration order must be in [3, " + std::to_string(kMaxEnumerationOrder) + "]");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::set<CanonicalGraph> level{canonical_form(triangle())};
  for (std::size_t order = 4; order <= n; ++order) {
    const std::vector<CanonicalGraph> parents(level.begin(), level.end());
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(parents.size()));
    std::vector<std::set<CanonicalGraph>> partial(workers);
    auto expand_range = [&](unsigned w) {
      for (std::size_t i = w; i < parents.size(); i += workers) {
        const SimpleGraph g = parents[i].to_graph();
        for (const auto& [a, b] : g.edges()) partial[w].insert(canonical_form(attach_ear(g, a, b).first));
      }
    };
    if (workers <= 1) {
      expand_range(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(expand_range, w);
      for (auto& t : pool) t.join();
    }
    level.clear();
    for (auto& s : partial) level.merge(s);
  }
  return level;
}

/// Distinct degree sequences of the 2-trees on n vertices.
inline std::set<DegreeSequence> degree_census(std::size_t n, unsigned threads = 0) {
  std::set<DegreeSequence> out;
  for (const CanonicalGraph& c : enumerate_two_trees(n, threads)) out.insert(degree_sequence(c.to_graph()));
  return out;
}

/// Every multiset of `n` integers from [lo, hi] summing to `total`, built as
/// non-increasing compositions with partial-sum pruning.
inline std::vector<DegreeSequence> sequences_with_sum(std::size_t n, Value total, Value lo, Value hi) {
  std::vector<DegreeSequence> out;
  if (lo < 1 || hi < lo) return out;
  std::vector<Value> cur;
  cur.reserve(n);
  std::function<void(std::size_t, Value, Value)> rec = [&](std::size_t left, Value remaining, Value cap) {
    if (left == 0) {
      if (remaining == 0) out.push_back(DegreeSequence::from_elements(cur));
      return;
    }
    const auto l = static_cast<Value>(left);
    for (Value v = std::min(cap, remaining - (l - 1) * lo); v >= lo; --v) {
      if (v * l < remaining) break;  // the rest cannot exceed v each
      cur.push_back(v);
      rec(left - 1, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(n, total, hi);
  return out;
}

}  // namespace twotree
