#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twotree/degseq.hpp"
#include "twotree/error.hpp"

namespace twotree {

/// Known necessary conditions on the degree sequence of a k-tree.
/// Passing all of them does not make a sequence realizable when k >= 3.
enum class KTreeCondition { i, ii, iii, iv, v, vi };

inline const char* ktree_condition_tag(KTreeCondition c) {
  switch (c) {
    case KTreeCondition::i: return "i";
    case KTreeCondition::ii: return "ii";
    case KTreeCondition::iii: return "iii";
    case KTreeCondition::iv: return "iv";
    case KTreeCondition::v: return "v";
    case KTreeCondition::vi: return "vi";
  }
  return "?";
}

namespace detail {

/// d with `count` copies of `value` taken out, or nothing if there are fewer.
inline std::optional<DegreeSequence> without(const DegreeSequence& d, Value value, std::int64_t count) {
  if (count <= 0) return d;
  if (d.multiplicity(value) < count) return std::nullopt;
  return d.remove(value, count);
}

}  // namespace detail

/// Violated conditions among (i)-(vi); empty means d passes every known
/// necessary condition for k-trees.
inline std::vector<KTreeCondition> check_ktree_necessary(const DegreeSequence& d, Value k) {
  if (k < 1) throw Error(Errc::invalid_value, "k must be positive");
  std::vector<KTreeCondition> out;
  const std::int64_t n = d.size();

  if (d.sum() != 2 * k * n - k * (k + 1)) out.push_back(KTreeCondition::i);
  if (!d.empty() && d.max() > n - 1) out.push_back(KTreeCondition::ii);
  if (d.empty() || d.min() != k || d.multiplicity(k) < 2) out.push_back(KTreeCondition::iii);
  if (k < 2 || d.empty()) return out;

  // The tail (n-1)^(k-2) belongs to the vertices of the lifted clique.
  const auto core = detail::without(d, n - 1, k - 2);

  // (iv): not <k^(n-k-2), e^4, (n-1)^(k-2)> with e = d' + k - 2, d' >= 5.
  if (core) {
    const std::int64_t ks = core->multiplicity(k);
    const bool shape = ks == n - k - 2 && core->size() - ks == 4 && core->max() >= k + 3 &&
                       core->multiplicity(core->max()) == 4 && core->distinct_count() == (ks > 0 ? 2u : 1u);
    if (shape) out.push_back(KTreeCondition::iv);
  }

  // (v): if every element outside the k's and the clique tail has the parity
  // of k, then 3 n_k >= n - k + 5.
  if (core) {
    const std::int64_t nk = core->multiplicity(k);
    bool parity = true;
    for (const Run& r : core->runs()) {
      if (r.value != k && (r.value - k) % 2 != 0) parity = false;
    }
    if (parity && 3 * nk < n - k + 5) out.push_back(KTreeCondition::v);
  }

  // (vi): with v = k(n+1)/(k+2) integral, d is not <k^(n-k-2), v^(k+2)>.
  if ((k * (n + 1)) % (k + 2) == 0) {
    const Value v = k * (n + 1) / (k + 2);
    if (v > 0 && n - k - 2 >= 0) {
      const DegreeSequence forbidden = DegreeSequence::from_runs({{k, n - k - 2}, {v, k + 2}});
      if (d == forbidden) out.push_back(KTreeCondition::vi);
    }
  }
  return out;
}

/// Adds one to every element and appends n (the new length minus one).
inline DegreeSequence lift(const DegreeSequence& d) {
  if (d.empty()) throw Error(Errc::empty_sequence, "cannot lift an empty sequence");
  std::vector<Run> runs;
  runs.reserve(d.distinct_count() + 1);
  for (const Run& r : d.runs()) runs.push_back({r.value + 1, r.count});
  runs.push_back({d.size(), 1});
  return DegreeSequence::from_runs(std::move(runs));
}

/// Inverse of lift: drops one copy of n - 1 and subtracts one from the rest.
inline DegreeSequence project(const DegreeSequence& d) {
  if (d.empty()) throw Error(Errc::empty_sequence, "cannot project an empty sequence");
  const std::int64_t n = d.size();
  if (d.multiplicity(n - 1) == 0) throw Error(Errc::no_dominating_value, "projection needs an element equal to n-1");
  if (d.min() < 2) throw Error(Errc::min_below_two, "projection needs every element at least 2");
  std::vector<Run> runs;
  runs.reserve(d.distinct_count());
  for (const Run& r : d.runs()) runs.push_back({r.value - 1, r.value == n - 1 ? r.count - 1 : r.count});
  return DegreeSequence::from_runs(std::move(runs));
}

}  // namespace twotree
