#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "twotree/degseq.hpp"
#include "twotree/error.hpp"
#include "twotree/graph.hpp"
#include "twotree/recognizer.hpp"
#include "twotree/tree_realizer.hpp"

namespace twotree {

/// A 2-tree together with a vertex of the requested degree and an ear next
/// to it. When the last step was a reduction, the partner vertex of degree k
/// and its ear are recorded too.
struct Realization {
  SimpleGraph graph;
  Vertex ell_vertex = 0;
  std::optional<Vertex> witness_ear;
  std::optional<Vertex> k_vertex;
  std::optional<Vertex> k_ear;
};

/// Sequence shapes that are realized directly, in the order they are tried.
enum class BaseCase {
  triangle,              // <2,2,2>
  two_hubs,              // <2^(n-2), x, y>
  three_hubs,            // <2^(n-3), x, y, z>
  five_hubs_skewed,      // <2^(n-5), x, d, d, d, d+x-2>, x >= 3, d >= 5
  five_hubs_uniform,     // <2^(n-5), d^5>, d >= 5
  dominating,            // n - 1 in D
  dominating_after_peel, // peel r ears off an x-y edge to reach the dominating case
};

inline const char* base_case_name(BaseCase b) {
  switch (b) {
    case BaseCase::triangle: return "triangle";
    case BaseCase::two_hubs: return "two_hubs";
    case BaseCase::three_hubs: return "three_hubs";
    case BaseCase::five_hubs_skewed: return "five_hubs_skewed";
    case BaseCase::five_hubs_uniform: return "five_hubs_uniform";
    case BaseCase::dominating: return "dominating";
    case BaseCase::dominating_after_peel: return "dominating_after_peel";
  }
  return "?";
}

struct BaseMatch {
  BaseCase kind = BaseCase::triangle;
  // Peel parameters, set only for dominating_after_peel.
  Value r = 0;
  Value x = 0;
  Value y = 0;
};

enum class SequenceKind { flat, special, typical };
enum class SpecialKind { none, even, odd_pair };

struct SequenceClass {
  SequenceKind kind = SequenceKind::typical;
  SpecialKind special = SpecialKind::none;

  friend bool operator==(const SequenceClass&, const SequenceClass&) = default;
};

/// The degree pair used by one reduction step. `ell` may differ from the
/// requested value when the roles were exchanged.
struct Pivot {
  Value ell = 0;
  Value k = 0;
};

namespace detail {

/// Multiplicity of `b` after removing r twos and lowering one x and one y by r.
template <SequenceLike S>
std::int64_t multiplicity_after_peel(const S& d, Value b, Value r, Value x, Value y) {
  std::int64_t m = d.multiplicity(b);
  if (b == 2) m -= r;
  if (x == b) --m;
  if (y == b) --m;
  if (x - r == b) ++m;
  if (y - r == b) ++m;
  return m;
}

/// Peel parameters for a fixed witness value b = n - r - 1, taking the
/// largest admissible partner y. ell is one of the two lowered values.
template <SequenceLike S>
std::optional<BaseMatch> peel_for_witness(const S& d, Value ell, Value b) {
  const std::int64_t n = d.size();
  const Value r = n - 1 - b;
  if (r < 1 || r > d.multiplicity(2) || ell - r < 2) return std::nullopt;
  // At most two values (ell and b) are inadmissible, so the best partner is
  // among the three largest distinct values.
  const std::size_t span = std::min<std::size_t>(3, d.distinct_count());
  for (std::size_t j = 0; j < span; ++j) {
    const Value y = d.distinct_from_top(j);
    if (y == ell || y - r < 2) continue;
    if (multiplicity_after_peel(d, b, r, ell, y) < 1) continue;
    return BaseMatch{BaseCase::dominating_after_peel, r, ell, y};
  }
  return std::nullopt;
}

template <SequenceLike S>
std::optional<BaseMatch> match_peel(const S& d, Value ell) {
  if (ell < 3) return std::nullopt;
  const std::size_t span = std::min<std::size_t>(3, d.distinct_count());
  for (std::size_t i = 0; i < span; ++i) {
    if (auto m = peel_for_witness(d, ell, d.distinct_from_top(i))) return m;
  }
  return std::nullopt;
}

/// The five non-2 values of a sequence with n - n2 == 5, ascending.
template <SequenceLike S>
std::array<Value, 5> five_hubs(const S& d) {
  std::array<Value, 5> out{};
  std::size_t filled = 0;
  const std::size_t start = d.min() == 2 ? 1 : 0;
  for (std::size_t i = start; i < d.distinct_count() && filled < 5; ++i) {
    const Value v = d.distinct_from_bottom(i);
    for (std::int64_t c = d.multiplicity(v); c > 0 && filled < 5; --c) out[filled++] = v;
  }
  return out;
}

/// (x, d) when the five hubs read {x, d, d, d, d + x - 2}, x >= 3, d >= 5.
inline std::optional<std::pair<Value, Value>> skewed_shape(const std::array<Value, 5>& h) {
  for (std::size_t i = 0; i + 2 < 5; ++i) {
    if (!(h[i] == h[i + 1] && h[i + 1] == h[i + 2])) continue;
    const Value dd = h[i];
    std::array<Value, 2> rest{};
    std::size_t k = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      if (j < i || j > i + 2) rest[k++] = h[j];
    }
    const Value x = rest[0];
    if (dd >= 5 && x >= 3 && rest[1] == dd + x - 2) return std::pair{x, dd};
  }
  return std::nullopt;
}

}  // namespace detail

/// First base case that applies to d with the requested value ell. Every
/// check reads O(1) runs; the peel check looks only at the three largest
/// distinct values.
template <SequenceLike S>
std::optional<BaseMatch> match_base_case(const S& d, Value ell) {
  const std::int64_t n = d.size();
  const std::int64_t twos = d.multiplicity(2);
  if (n == 3) return BaseMatch{BaseCase::triangle};
  if (twos == n - 2) return BaseMatch{BaseCase::two_hubs};
  if (twos == n - 3) return BaseMatch{BaseCase::three_hubs};
  if (twos == n - 5) {
    const auto hubs = detail::five_hubs(d);
    if (detail::skewed_shape(hubs)) return BaseMatch{BaseCase::five_hubs_skewed};
    if (hubs[0] == hubs[4] && hubs[0] >= 5) return BaseMatch{BaseCase::five_hubs_uniform};
  }
  if (d.max() == n - 1) return BaseMatch{BaseCase::dominating};
  return detail::match_peel(d, ell);
}

/// Flat, special (even / odd-pair) or typical; d must not be a base case.
template <SequenceLike S>
SequenceClass classify(const S& d, Value ell) {
  if (d.distinct_count() <= 2) return {SequenceKind::flat, SpecialKind::none};
  if (d.multiplicity(4) >= 3) {
    if (d.odd_count() == 0) return {SequenceKind::special, SpecialKind::even};
    if (d.odd_count() == 2 && d.multiplicity(3) == 1 && ell >= 5 && ell % 2 != 0) {
      return {SequenceKind::special, SpecialKind::odd_pair};
    }
  }
  return {SequenceKind::typical, SpecialKind::none};
}

/// Chooses k (d2 or d3 in run order) and exchanges roles when ell is the
/// smallest element above 2.
template <SequenceLike S>
Pivot choose_k(const S& d, Value ell, SequenceClass cls) {
  const Value alpha = d.distinct_from_bottom(1);
  if (cls.kind == SequenceKind::flat) return {alpha, alpha};
  if (cls.kind == SequenceKind::special && cls.special == SpecialKind::odd_pair) return {ell, 4};
  if (ell == alpha) return {d.distinct_from_bottom(2), alpha};
  return {ell, alpha};
}

/// Applies the reduction for one step in place; returns the value whose
/// vertex must sit next to an ear in the smaller realization.
inline Value reduce_in_place(RunList& d, Pivot p, SequenceClass cls) {
  switch (cls.kind) {
    case SequenceKind::flat: {
      const Value dd = p.k;
      d.remove(2, 2 * dd - 7);
      d.remove(dd, 2);
      d.decrease(dd, dd - 2);
      d.decrease(dd, dd - 4);
      return 4;
    }
    case SequenceKind::typical:
      d.remove(2, p.k - 2);
      d.decrease(p.ell, p.k - 2);
      d.decrease(p.k, p.k - 2);
      return p.ell - p.k + 2;
    case SequenceKind::special:
      d.remove(2, 2);
      d.remove(4, 1);
      d.decrease(p.ell, 2);
      d.decrease(p.k, 2);
      return p.ell - 2;
  }
  throw Error(Errc::internal, "unknown sequence class");
}

inline std::pair<DegreeSequence, Value> reduce(const DegreeSequence& d, Pivot p, SequenceClass cls) {
  RunList w(d);
  const Value next = reduce_in_place(w, p, cls);
  return {w.snapshot(), next};
}

/// Rebuilds the larger 2-tree from a realization of the reduced sequence
/// whose ell_vertex v has degree `reduced ell` and is adjacent to ear w.
/// The result marks a degree-p.ell vertex and a degree-p.k vertex, each next
/// to an ear.
inline Realization expand(Realization sub, Pivot p, SequenceClass cls) {
  if (!sub.witness_ear) throw Error(Errc::internal, "expansion needs an ear next to the marked vertex");
  SimpleGraph& g = sub.graph;
  const Vertex v = sub.ell_vertex;
  const Vertex w = *sub.witness_ear;
  if (g.degree(w) != 2 || !g.has_edge(v, w)) throw Error(Errc::internal, "marked ear is not an ear of the marked vertex");

  Realization out;
  switch (cls.kind) {
    case SequenceKind::flat: {
      const Value dd = p.k;
      const Vertex u = attach_ears(g, v, w, static_cast<std::size_t>(dd - 4));
      const Vertex q = attach_ears(g, w, u, 1);
      const Vertex e = attach_ears(g, w, q, 1);
      attach_ears(g, u, q, static_cast<std::size_t>(dd - 3));
      out.ell_vertex = w;
      out.witness_ear = e;
      out.k_vertex = q;
      out.k_ear = e;
      break;
    }
    case SequenceKind::typical: {
      const Vertex e = attach_ears(g, v, w, static_cast<std::size_t>(p.k - 2));
      out.ell_vertex = v;
      out.witness_ear = e;
      out.k_vertex = w;
      out.k_ear = e;
      break;
    }
    case SequenceKind::special: {
      const Vertex u = attach_ears(g, v, w, 1);
      const Vertex a = attach_ears(g, v, u, 1);
      const Vertex b = attach_ears(g, w, u, 1);
      out.ell_vertex = v;
      out.witness_ear = a;
      out.k_vertex = w;
      out.k_ear = b;
      break;
    }
  }
  out.graph = std::move(g);
  return out;
}

namespace detail {

inline Realization with_witness(SimpleGraph g, Value ell) {
  const auto wit = find_ear_witness(g, ell);
  if (!wit) throw Error(Errc::internal, "base construction left degree " + std::to_string(ell) + " without an ear");
  Realization out;
  out.graph = std::move(g);
  out.ell_vertex = wit->first;
  out.witness_ear = wit->second;
  return out;
}

template <SequenceLike S>
void require(bool ok, const S&, const char* what) {
  if (!ok) throw Error(Errc::pattern_mismatch, std::string("sequence does not have the ") + what + " shape");
}

}  // namespace detail

// Base-case builders. Each returns a realization in which every vertex of
// degree above 2 is adjacent to an ear, with the witness set for `ell`.

/// K3 with n - 3 ears on one edge.
template <SequenceLike S>
Realization build_two_hubs(const S& d, Value ell) {
  const std::int64_t n = d.size();
  detail::require(n >= 4 && d.multiplicity(2) == n - 2 && d.max() == n - 1 && d.multiplicity(n - 1) == 2, d,
                  "two-hub");
  SimpleGraph g = triangle();
  attach_ears(g, 0, 1, static_cast<std::size_t>(n - 3));
  return detail::with_witness(std::move(g), ell);
}

/// K3 on hubs of degree x, y, z with (x+y-z-2)/2, (x-y+z-2)/2, (-x+y+z-2)/2
/// ears on its three edges.
template <SequenceLike S>
Realization build_three_hubs(const S& d, Value ell) {
  const std::int64_t n = d.size();
  detail::require(n >= 4 && d.multiplicity(2) == n - 3, d, "three-hub");
  std::array<Value, 3> h{};
  std::size_t f = 0;
  for (std::size_t i = 1; i < d.distinct_count() && f < 3; ++i) {
    const Value v = d.distinct_from_bottom(i);
    for (std::int64_t c = d.multiplicity(v); c > 0 && f < 3; --c) h[f++] = v;
  }
  const auto [x, y, z] = h;
  const Value e1 = x + y - z - 2;
  const Value e2 = x - y + z - 2;
  const Value e3 = -x + y + z - 2;
  detail::require(x >= 3 && e1 >= 0 && e2 >= 0 && e3 >= 0 && e1 % 2 == 0 && e2 % 2 == 0 && e3 % 2 == 0, d,
                  "three-hub");
  SimpleGraph g = triangle();
  attach_ears(g, 0, 1, static_cast<std::size_t>(e1 / 2));
  attach_ears(g, 0, 2, static_cast<std::size_t>(e2 / 2));
  attach_ears(g, 1, 2, static_cast<std::size_t>(e3 / 2));
  return detail::with_witness(std::move(g), ell);
}

namespace detail {

/// Fan of hub 0 over the path 1-2-3-4: degrees 4, 2, 3, 3, 2.
inline SimpleGraph five_core() {
  SimpleGraph g(5);
  for (Vertex v = 1; v <= 4; ++v) g.add_edge(0, v);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  return g;
}

}  // namespace detail

/// Five-vertex core plus 1, 1, d-4, x-3, d-3 ears on the edges
/// (1,2), (3,4), (2,3), (0,1), (0,4). Hub 0 ends with degree d+x-2, hub 1 with
/// x, hubs 2-4 with d.
template <SequenceLike S>
Realization build_five_hubs_skewed(const S& d, Value ell) {
  const std::int64_t n = d.size();
  detail::require(n >= 6 && d.multiplicity(2) == n - 5, d, "skewed five-hub");
  const auto shape = detail::skewed_shape(detail::five_hubs(d));
  detail::require(shape.has_value(), d, "skewed five-hub");
  const auto [x, dd] = *shape;
  SimpleGraph g = detail::five_core();
  attach_ears(g, 1, 2, 1);
  attach_ears(g, 3, 4, 1);
  attach_ears(g, 2, 3, static_cast<std::size_t>(dd - 4));
  attach_ears(g, 0, 1, static_cast<std::size_t>(x - 3));
  attach_ears(g, 0, 4, static_cast<std::size_t>(dd - 3));
  return detail::with_witness(std::move(g), ell);
}

/// Five-vertex core plus (d-4)/2, (d-4)/2, (d-6)/2, d/2, d/2 ears on the
/// edges (0,1), (0,4), (2,3), (1,2), (3,4); all five hubs end at degree d.
template <SequenceLike S>
Realization build_five_hubs_uniform(const S& d, Value ell) {
  const std::int64_t n = d.size();
  detail::require(n >= 6 && d.multiplicity(2) == n - 5, d, "uniform five-hub");
  const auto hubs = detail::five_hubs(d);
  const Value dd = hubs[0];
  detail::require(hubs[4] == dd && dd >= 6 && dd % 2 == 0, d, "uniform five-hub");
  SimpleGraph g = detail::five_core();
  attach_ears(g, 0, 1, static_cast<std::size_t>((dd - 4) / 2));
  attach_ears(g, 0, 4, static_cast<std::size_t>((dd - 4) / 2));
  attach_ears(g, 2, 3, static_cast<std::size_t>((dd - 6) / 2));
  attach_ears(g, 1, 2, static_cast<std::size_t>(dd / 2));
  attach_ears(g, 3, 4, static_cast<std::size_t>(dd / 2));
  return detail::with_witness(std::move(g), ell);
}

template <SequenceLike S>
Realization build_base(const S& d, Value ell, const BaseMatch& m) {
  switch (m.kind) {
    case BaseCase::triangle: {
      Realization out;
      out.graph = triangle();
      out.ell_vertex = 0;
      out.witness_ear = 1;
      return out;
    }
    case BaseCase::two_hubs: return build_two_hubs(d, ell);
    case BaseCase::three_hubs: return build_three_hubs(d, ell);
    case BaseCase::five_hubs_skewed: return build_five_hubs_skewed(d, ell);
    case BaseCase::five_hubs_uniform: return build_five_hubs_uniform(d, ell);
    case BaseCase::dominating: {
      const DegreeSequence full = [&] {
        if constexpr (std::is_same_v<S, DegreeSequence>) {
          return d;
        } else {
          return d.snapshot();
        }
      }();
      MarkedRealization mr = realize_with_dominating(full, ell, 2);
      Realization out;
      out.graph = std::move(mr.graph);
      out.ell_vertex = mr.ell_vertex;
      out.witness_ear = mr.k_vertex;
      return out;
    }
    case BaseCase::dominating_after_peel: {
      const DegreeSequence full = [&] {
        if constexpr (std::is_same_v<S, DegreeSequence>) {
          return d;
        } else {
          return d.snapshot();
        }
      }();
      const DegreeSequence peeled = full.remove(2, m.r).decrease(m.x, m.r).decrease(m.y, m.r);
      MarkedRealization mr = realize_with_dominating(peeled, m.x - m.r, m.y - m.r);
      const Vertex e = attach_ears(mr.graph, mr.ell_vertex, mr.k_vertex, static_cast<std::size_t>(m.r));
      Realization out;
      out.graph = std::move(mr.graph);
      const bool x_is_ell = m.x == ell;
      out.ell_vertex = x_is_ell ? mr.ell_vertex : mr.k_vertex;
      out.witness_ear = e;
      out.k_vertex = x_is_ell ? mr.k_vertex : mr.ell_vertex;
      out.k_ear = e;
      return out;
    }
  }
  throw Error(Errc::internal, "unknown base case");
}

/// Counters describing one realize() run.
struct RealizeStats {
  std::size_t reductions = 0;
  std::size_t flat_steps = 0;
  std::size_t special_steps = 0;
  std::size_t typical_steps = 0;
  std::size_t reductions_verified = 0;  // reduced sequences re-checked against (a)-(e)
  std::optional<BaseCase> base;
  std::uint64_t sequence_operations = 0;  // run-list edits and link walks
  std::vector<DegreeSequence> reduced;    // filled only with RealizeOptions::record_reduced
};

struct RealizeOptions {
  /// Re-run the O(1) recognizer on every reduced sequence.
  bool verify_reductions = true;
  /// Keep a snapshot of every reduced sequence (O(p) each; for tests).
  bool record_reduced = false;
};

/// Thrown when the input is not a 2-tree degree sequence.
class RejectedSequence : public Error {
 public:
  explicit RejectedSequence(Condition c)
      : Error(Errc::rejected, std::string("not a 2-tree degree sequence (condition ") + condition_tag(c) + ")"),
        condition_(c) {}

  Condition condition() const noexcept { return condition_; }

 private:
  Condition condition_;
};

/// Realizes d as a 2-tree in which a vertex of degree ell is adjacent to an
/// ear. ell defaults to max(d); <2,2,2> is the only input that accepts ell = 2.
///
/// Runs in O(n): the reduction loop works on a RunList whose total edit cost
/// is bounded by the degree sum, and each expansion attaches only the
/// vertices it adds.
inline Realization realize(const DegreeSequence& d, std::optional<Value> ell = std::nullopt,
                           RealizeStats* stats = nullptr, RealizeOptions opts = {}) {
  if (auto v = recognize(d); !v) throw RejectedSequence(*v.violated);
  const bool is_triangle = d.size() == 3;
  Value want = ell.value_or(d.max());
  if (d.multiplicity(want) == 0) {
    throw Error(Errc::value_not_in_sequence, std::to_string(want) + " is not in the sequence");
  }
  if (want < 3 && !is_triangle) throw Error(Errc::ell_too_small, "the marked degree must be at least 3");

  struct Frame {
    Value requested;
    Pivot pivot;
    SequenceClass cls;
  };
  std::vector<Frame> frames;
  RunList work(d);
  RealizeStats local;
  RealizeStats& st = stats ? *stats : local;
  st = RealizeStats{};

  std::optional<BaseMatch> base;
  while (!(base = match_base_case(work, want))) {
    const SequenceClass cls = classify(work, want);
    const Pivot p = choose_k(work, want, cls);
    if (cls.kind == SequenceKind::flat) {
      const Value dd = p.k;
      if (work.multiplicity(2) < 2 * dd - 7 || work.multiplicity(dd) < 6) {
        throw Error(Errc::internal, "flat reduction is not feasible");
      }
    }
    const std::int64_t before = work.size();
    const Value next = reduce_in_place(work, p, cls);
    if (work.size() >= before || next < 3 || work.multiplicity(next) == 0) {
      throw Error(Errc::internal, "reduction made no progress");
    }
    if (opts.verify_reductions) {
      if (auto v = recognize(work); !v) {
        throw Error(Errc::internal, std::string("reduced sequence violates condition ") + condition_tag(*v.violated));
      }
      ++st.reductions_verified;
    }
    if (opts.record_reduced) st.reduced.push_back(work.snapshot());
    ++st.reductions;
    switch (cls.kind) {
      case SequenceKind::flat: ++st.flat_steps; break;
      case SequenceKind::special: ++st.special_steps; break;
      case SequenceKind::typical: ++st.typical_steps; break;
    }
    frames.push_back({want, p, cls});
    want = next;
  }
  st.base = base->kind;

  Realization r = build_base(work, want, *base);
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    r = expand(std::move(r), it->pivot, it->cls);
    if (it->requested != it->pivot.ell) {
      std::swap(r.ell_vertex, *r.k_vertex);
      std::swap(*r.witness_ear, *r.k_ear);
    }
  }
  st.sequence_operations = work.operations();
  return r;
}

/// K3 followed by n - 3 ears, each on an edge drawn uniformly from the edges
/// present so far. Deterministic for a given seed.
inline SimpleGraph random_two_tree(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw Error(Errc::out_of_bounds, "a 2-tree needs at least three vertices");
  std::mt19937_64 rng(seed);
  SimpleGraph g = triangle();
  std::vector<Edge> pool{{0, 1}, {0, 2}, {1, 2}};
  pool.reserve(2 * n - 3);
  for (std::size_t i = 3; i < n; ++i) {
    const Edge e = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const Vertex x = attach_ears(g, e.first, e.second, 1);
    pool.emplace_back(e.first, x);
    pool.emplace_back(e.second, x);
  }
  return g;
}

}  // namespace twotree
