#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "twotree/error.hpp"

namespace twotree {

using Value = std::int64_t;

/// One maximal block of equal elements.
struct Run {
  Value value = 0;
  std::int64_t count = 0;

  friend auto operator<=>(const Run&, const Run&) = default;
};

/// Read-only queries shared by the immutable DegreeSequence and the mutable
/// RunList. Every recognition and classification routine is written against
/// this interface so the same code runs on both.
template <class S>
concept SequenceLike = requires(const S& s, Value v, std::size_t i) {
  { s.size() } -> std::convertible_to<std::int64_t>;
  { s.sum() } -> std::convertible_to<std::int64_t>;
  { s.odd_count() } -> std::convertible_to<std::int64_t>;
  { s.distinct_count() } -> std::convertible_to<std::size_t>;
  { s.multiplicity(v) } -> std::convertible_to<std::int64_t>;
  { s.min() } -> std::convertible_to<Value>;
  { s.max() } -> std::convertible_to<Value>;
  { s.distinct_from_bottom(i) } -> std::convertible_to<Value>;
  { s.distinct_from_top(i) } -> std::convertible_to<Value>;
};

/// Sorted multiset of positive integers in run-length form, ascending by
/// value, with cached element count, odd-element count and sum.
///
/// Values are immutable; remove() and decrease() return new sequences.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  static DegreeSequence from_elements(std::span<const Value> values) {
    if (values.empty()) return {};
    Value hi = 0;
    for (Value v : values) {
      if (v < 1) throw Error(Errc::invalid_value, "sequence elements must be positive, got " + std::to_string(v));
      hi = std::max(hi, v);
    }
    DegreeSequence d;
    // Degrees of an n-vertex graph are below n, so counting sort is the
    // normal path; fall back to comparison sort for sparse large values.
    if (hi <= 4 * static_cast<Value>(values.size()) + 16) {
      std::vector<std::int64_t> counts(static_cast<std::size_t>(hi) + 1, 0);
      for (Value v : values) ++counts[static_cast<std::size_t>(v)];
      for (Value v = 1; v <= hi; ++v) {
        if (counts[static_cast<std::size_t>(v)] > 0) d.push_run(v, counts[static_cast<std::size_t>(v)]);
      }
    } else {
      std::vector<Value> sorted(values.begin(), values.end());
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        d.push_run(sorted[i], static_cast<std::int64_t>(j - i));
        i = j;
      }
    }
    return d;
  }

  static DegreeSequence from_elements(std::initializer_list<Value> values) {
    return from_elements(std::span<const Value>(values.begin(), values.size()));
  }

  /// Runs may arrive in any order and may repeat a value; they are merged.
  static DegreeSequence from_runs(std::vector<Run> runs) {
    for (const Run& r : runs) {
      if (r.value < 1) throw Error(Errc::invalid_value, "run value must be positive, got " + std::to_string(r.value));
      if (r.count < 0) throw Error(Errc::invalid_value, "run multiplicity must be non-negative");
    }
    std::sort(runs.begin(), runs.end());
    DegreeSequence d;
    for (const Run& r : runs) {
      if (r.count == 0) continue;
      if (!d.runs_.empty() && d.runs_.back().value == r.value) {
        d.runs_.back().count += r.count;
        d.account(r.value, r.count);
      } else {
        d.push_run(r.value, r.count);
      }
    }
    return d;
  }

  const std::vector<Run>& runs() const noexcept { return runs_; }
  std::int64_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }
  std::int64_t odd_count() const noexcept { return n_odd_; }
  std::int64_t sum() const noexcept { return sum_; }
  std::size_t distinct_count() const noexcept { return runs_.size(); }
  bool is_even() const noexcept { return n_odd_ == 0; }

  std::int64_t multiplicity(Value t) const {
    auto it = std::lower_bound(runs_.begin(), runs_.end(), t,
                               [](const Run& r, Value v) { return r.value < v; });
    return (it != runs_.end() && it->value == t) ? it->count : 0;
  }

  Value min() const {
    require_nonempty("min");
    return runs_.front().value;
  }

  Value max() const {
    require_nonempty("max");
    return runs_.back().value;
  }

  Value distinct_from_bottom(std::size_t i) const { return runs_.at(i).value; }
  Value distinct_from_top(std::size_t i) const { return runs_.at(runs_.size() - 1 - i).value; }

  /// Deletes `count` occurrences of `value`.
  DegreeSequence remove(Value value, std::int64_t count) const {
    if (count < 0) throw Error(Errc::invalid_value, "negative removal count");
    if (multiplicity(value) < count) {
      throw Error(Errc::underflow, "cannot remove " + std::to_string(count) + " copies of " + std::to_string(value));
    }
    std::vector<Run> out = runs_;
    for (Run& r : out) {
      if (r.value == value) r.count -= count;
    }
    return from_runs(std::move(out));
  }

  /// Moves one occurrence of `value` to `value - delta`.
  DegreeSequence decrease(Value value, Value delta) const {
    if (multiplicity(value) < 1) {
      throw Error(Errc::underflow, "value " + std::to_string(value) + " is not in the sequence");
    }
    if (delta < 0 || value - delta < 1) {
      throw Error(Errc::invalid_value, "decreasing " + std::to_string(value) + " by " + std::to_string(delta) +
                                           " leaves a non-positive element");
    }
    std::vector<Run> out = runs_;
    for (Run& r : out) {
      if (r.value == value) --r.count;
    }
    out.push_back({value - delta, 1});
    return from_runs(std::move(out));
  }

  /// Elements in ascending order.
  std::vector<Value> elements() const {
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (const Run& r : runs_) out.insert(out.end(), static_cast<std::size_t>(r.count), r.value);
    return out;
  }

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) { return a.runs_ == b.runs_; }
  friend auto operator<=>(const DegreeSequence& a, const DegreeSequence& b) { return a.runs_ <=> b.runs_; }

 private:
  void push_run(Value v, std::int64_t c) {
    runs_.push_back({v, c});
    account(v, c);
  }

  void account(Value v, std::int64_t c) {
    n_ += c;
    sum_ += v * c;
    if (v % 2 != 0) n_odd_ += c;
  }

  void require_nonempty(const char* what) const {
    if (runs_.empty()) throw Error(Errc::empty_sequence, std::string(what) + " of an empty sequence");
  }

  std::vector<Run> runs_;
  std::int64_t n_ = 0;
  std::int64_t n_odd_ = 0;
  std::int64_t sum_ = 0;
};

static_assert(SequenceLike<DegreeSequence>);

/// Mutable run-length working form used inside the realization loop.
///
/// Distinct values are kept in a doubly linked list indexed by value, so the
/// node for value v is slot v. Lowering one occurrence from v to v - delta
/// walks backwards from v over at most delta - 1 nodes to find the insertion
/// point; removals are O(1).
class RunList {
 public:
  explicit RunList(const DegreeSequence& d) {
    const std::size_t cap = d.empty() ? 1 : static_cast<std::size_t>(d.max()) + 1;
    count_.assign(cap, 0);
    next_.assign(cap, 0);
    prev_.assign(cap, 0);
    Value last = 0;
    for (const Run& r : d.runs()) {
      const auto v = static_cast<std::size_t>(r.value);
      count_[v] = r.count;
      prev_[v] = last;
      next_[static_cast<std::size_t>(last)] = r.value;
      last = r.value;
    }
    next_[static_cast<std::size_t>(last)] = 0;
    prev_[0] = last;
    n_ = d.size();
    n_odd_ = d.odd_count();
    sum_ = d.sum();
    distinct_ = d.distinct_count();
  }

  std::int64_t size() const noexcept { return n_; }
  std::int64_t sum() const noexcept { return sum_; }
  std::int64_t odd_count() const noexcept { return n_odd_; }
  std::size_t distinct_count() const noexcept { return distinct_; }
  bool empty() const noexcept { return n_ == 0; }

  std::int64_t multiplicity(Value v) const noexcept {
    return (v >= 1 && static_cast<std::size_t>(v) < count_.size()) ? count_[static_cast<std::size_t>(v)] : 0;
  }

  Value min() const {
    require_nonempty();
    return next_[0];
  }

  Value max() const {
    require_nonempty();
    return prev_[0];
  }

  Value distinct_from_bottom(std::size_t i) const {
    if (i >= distinct_) throw Error(Errc::out_of_bounds, "distinct index out of range");
    Value v = next_[0];
    while (i-- > 0) v = next_[static_cast<std::size_t>(v)];
    return v;
  }

  Value distinct_from_top(std::size_t i) const {
    if (i >= distinct_) throw Error(Errc::out_of_bounds, "distinct index out of range");
    Value v = prev_[0];
    while (i-- > 0) v = prev_[static_cast<std::size_t>(v)];
    return v;
  }

  void remove(Value v, std::int64_t c) {
    if (c < 0 || multiplicity(v) < c) {
      throw Error(Errc::underflow, "cannot remove " + std::to_string(c) + " copies of " + std::to_string(v));
    }
    if (c == 0) return;
    count_[static_cast<std::size_t>(v)] -= c;
    n_ -= c;
    sum_ -= v * c;
    if (v % 2 != 0) n_odd_ -= c;
    if (count_[static_cast<std::size_t>(v)] == 0) unlink(v);
    ops_ += 1;
  }

  void decrease(Value v, Value delta) {
    if (multiplicity(v) < 1) throw Error(Errc::underflow, "value " + std::to_string(v) + " is not in the sequence");
    const Value t = v - delta;
    if (delta < 0 || t < 1) throw Error(Errc::invalid_value, "decrease leaves a non-positive element");
    if (delta == 0) return;
    if (count_[static_cast<std::size_t>(t)] == 0) {
      Value p = prev_[static_cast<std::size_t>(v)];
      while (p != 0 && p > t) {
        p = prev_[static_cast<std::size_t>(p)];
        ++ops_;
      }
      link_after(p, t);
    }
    ++count_[static_cast<std::size_t>(t)];
    --count_[static_cast<std::size_t>(v)];
    if (count_[static_cast<std::size_t>(v)] == 0) unlink(v);
    sum_ -= delta;
    if (v % 2 != 0) --n_odd_;
    if (t % 2 != 0) ++n_odd_;
    ops_ += 1;
  }

  DegreeSequence snapshot() const {
    std::vector<Run> runs;
    runs.reserve(distinct_);
    for (Value v = next_[0]; v != 0; v = next_[static_cast<std::size_t>(v)]) {
      runs.push_back({v, count_[static_cast<std::size_t>(v)]});
    }
    return DegreeSequence::from_runs(std::move(runs));
  }

  /// Count of list operations and link walks performed so far.
  std::uint64_t operations() const noexcept { return ops_; }

 private:
  void require_nonempty() const {
    if (n_ == 0) throw Error(Errc::empty_sequence, "query on an empty sequence");
  }

  void unlink(Value v) {
    const auto i = static_cast<std::size_t>(v);
    next_[static_cast<std::size_t>(prev_[i])] = next_[i];
    prev_[static_cast<std::size_t>(next_[i])] = prev_[i];
    --distinct_;
  }

  void link_after(Value p, Value t) {
    const auto ti = static_cast<std::size_t>(t);
    const Value nx = next_[static_cast<std::size_t>(p)];
    next_[ti] = nx;
    prev_[ti] = p;
    next_[static_cast<std::size_t>(p)] = t;
    prev_[static_cast<std::size_t>(nx)] = t;
    ++distinct_;
  }

  std::vector<std::int64_t> count_;
  std::vector<Value> next_;  // slot 0 is the list sentinel
  std::vector<Value> prev_;
  std::int64_t n_ = 0;
  std::int64_t n_odd_ = 0;
  std::int64_t sum_ = 0;
  std::size_t distinct_ = 0;
  std::uint64_t ops_ = 0;
};

static_assert(SequenceLike<RunList>);

// Text form: tokens separated by whitespace or commas; a token is either `v`
// or `v^m`.

inline DegreeSequence parse_sequence(std::string_view text) {
  std::vector<Run> runs;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0; };
  auto parse_int = [&](std::string_view tok, std::string_view whole) {
    Value out = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw Error(Errc::parse_error, "malformed sequence token '" + std::string(whole) + "'");
    }
    return out;
  };
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    const auto caret = tok.find('^');
    if (caret == std::string_view::npos) {
      runs.push_back({parse_int(tok, tok), 1});
    } else {
      const Value v = parse_int(tok.substr(0, caret), tok);
      const Value m = parse_int(tok.substr(caret + 1), tok);
      if (m < 1) throw Error(Errc::parse_error, "run multiplicity must be positive in '" + std::string(tok) + "'");
      runs.push_back({v, m});
    }
    i = j;
  }
  for (const Run& r : runs) {
    if (r.value < 1) throw Error(Errc::invalid_value, "sequence elements must be positive, got " + std::to_string(r.value));
  }
  return DegreeSequence::from_runs(std::move(runs));
}

/// Ascending run tokens, `v` for a single occurrence and `v^m` otherwise.
inline std::string to_string(const DegreeSequence& d) {
  std::ostringstream os;
  bool first = true;
  for (const Run& r : d.runs()) {
    if (!first) os << ' ';
    first = false;
    os << r.value;
    if (r.count != 1) os << '^' << r.count;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const DegreeSequence& d) { return os << '<' << to_string(d) << '>'; }

}  // namespace twotree
