#pragma once

#include <stdexcept>
#include <string>

namespace twotree {

enum class Errc {
  invalid_value,          // element < 1 where a positive integer is required
  empty_sequence,
  underflow,              // removing/decreasing more than the sequence holds
  parse_error,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  not_an_edge,
  not_a_tree,
  not_a_two_tree,
  wrong_sum,
  value_not_in_sequence,
  need_two_occurrences,
  both_leaves,            // tree adjacency between two degree-1 vertices, n > 2
  both_twos,              // 2-tree adjacency between two degree-2 vertices, n > 3
  min_below_two,
  no_dominating_value,    // n - 1 missing from the sequence
  ell_too_small,
  rejected,               // sequence is not a 2-tree degree sequence
  pattern_mismatch,       // base-case builder called on the wrong shape
  out_of_bounds,
  internal,               // broken invariant; indicates a bug
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_value: return "invalid_value";
    case Errc::empty_sequence: return "empty_sequence";
    case Errc::underflow: return "underflow";
    case Errc::parse_error: return "parse_error";
    case Errc::vertex_out_of_range: return "vertex_out_of_range";
    case Errc::self_loop: return "self_loop";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::not_an_edge: return "not_an_edge";
    case Errc::not_a_tree: return "not_a_tree";
    case Errc::not_a_two_tree: return "not_a_two_tree";
    case Errc::wrong_sum: return "wrong_sum";
    case Errc::value_not_in_sequence: return "value_not_in_sequence";
    case Errc::need_two_occurrences: return "need_two_occurrences";
    case Errc::both_leaves: return "both_leaves";
    case Errc::both_twos: return "both_twos";
    case Errc::min_below_two: return "min_below_two";
    case Errc::no_dominating_value: return "no_dominating_value";
    case Errc::ell_too_small: return "ell_too_small";
    case Errc::rejected: return "rejected";
    case Errc::pattern_mismatch: return "pattern_mismatch";
    case Errc::out_of_bounds: return "out_of_bounds";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace twotree
