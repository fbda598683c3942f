#pragma once

#include <optional>
#include <string>

#include "twotree/degseq.hpp"

namespace twotree {

/// Condition tags in the order they are checked. `domain` covers sequences
/// that are too short or contain an element below 2.
enum class Condition { domain, a, b, c, d, e };

inline const char* condition_tag(Condition c) {
  switch (c) {
    case Condition::domain: return "domain";
    case Condition::a: return "a";
    case Condition::b: return "b";
    case Condition::c: return "c";
    case Condition::d: return "d";
    case Condition::e: return "e";
  }
  return "?";
}

struct RecognitionVerdict {
  std::optional<Condition> violated;

  bool accepted() const noexcept { return !violated.has_value(); }
  explicit operator bool() const noexcept { return accepted(); }
};

// Each predicate is O(1) on a RunList and O(log p) on a DegreeSequence.
// They assume the domain check passed.

template <SequenceLike S>
bool in_domain(const S& d) {
  return d.size() >= 3 && d.min() >= 2;
}

/// Degree sum is 4n - 6.
template <SequenceLike S>
bool condition_a(const S& d) {
  return d.sum() == 4 * d.size() - 6;
}

/// Largest element at most n - 1.
template <SequenceLike S>
bool condition_b(const S& d) {
  return d.max() <= d.size() - 1;
}

/// Smallest element is 2 and it appears at least twice.
template <SequenceLike S>
bool condition_c(const S& d) {
  return d.min() == 2 && d.multiplicity(2) >= 2;
}

/// Not of the form <2^(n-4), v^4> with v >= 5.
template <SequenceLike S>
bool condition_d(const S& d) {
  const std::int64_t twos = d.multiplicity(2);
  const bool shape = d.size() - twos == 4 && d.distinct_count() == (twos > 0 ? 2u : 1u) && d.max() >= 5 &&
                     d.multiplicity(d.max()) == 4;
  return !shape;
}

/// An all-even sequence has 3 * n2 >= n + 3.
template <SequenceLike S>
bool condition_e(const S& d) {
  return d.odd_count() != 0 || 3 * d.multiplicity(2) >= d.size() + 3;
}

/// First failing condition in the order domain, a, b, c, d, e.
template <SequenceLike S>
RecognitionVerdict recognize(const S& d) {
  if (!in_domain(d)) return {Condition::domain};
  if (!condition_a(d)) return {Condition::a};
  if (!condition_b(d)) return {Condition::b};
  if (!condition_c(d)) return {Condition::c};
  if (!condition_d(d)) return {Condition::d};
  if (!condition_e(d)) return {Condition::e};
  return {};
}

/// Degree sequence of a tree: n >= 1 positive elements summing to 2n - 2.
inline bool recognize_tree(const DegreeSequence& d) {
  return d.size() >= 1 && d.min() >= 1 && d.sum() == 2 * d.size() - 2;
}

}  // namespace twotree
