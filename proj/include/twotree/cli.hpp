#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twotree/degseq.hpp"
#include "twotree/error.hpp"
#include "twotree/graph.hpp"
#include "twotree/ktree.hpp"
#include "twotree/oracle.hpp"
#include "twotree/recognizer.hpp"
#include "twotree/two_tree_realizer.hpp"

namespace twotree::cli {

enum ExitCode : int { kSuccess = 0, kRejected = 1, kUsage = 2 };

namespace detail {

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw Error(Errc::parse_error, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline DegreeSequence sequence_input(const std::vector<std::string>& tokens, const std::string& file, std::istream& in) {
  if (!file.empty() && !tokens.empty()) throw Error(Errc::parse_error, "give the sequence inline or with --file, not both");
  if (!file.empty()) return parse_sequence(slurp(file, in));
  if (tokens.empty()) throw Error(Errc::parse_error, "missing sequence");
  std::string joined;
  for (const auto& t : tokens) joined += t + ' ';
  return parse_sequence(joined);
}

inline SimpleGraph graph_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_edge_list(in);
  std::ifstream f(path);
  if (!f) throw Error(Errc::parse_error, "cannot read '" + path + "'");
  return read_edge_list(f);
}

}  // namespace detail

/// Runs one command line (arguments after the program name). Data goes to
/// `out`, diagnostics to `err`. Returns 0 on success or acceptance, 1 on
/// rejection or failed verification, 2 on usage or input errors.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree sequences of 2-trees: recognition, realization and verification", "twotree"};
  app.require_subcommand(1);

  std::vector<std::string> seq_tokens;
  std::string seq_file;

  auto* recognize_cmd = app.add_subcommand("recognize", "Decide whether a sequence is the degree sequence of a 2-tree");
  recognize_cmd->add_option("SEQ", seq_tokens, "Sequence, e.g. \"2^5 3 3 5^6\"");
  recognize_cmd->add_option("--file", seq_file, "Read the sequence from a file ('-' for stdin)");

  std::optional<Value> ell;
  bool dot = false;
  auto* realize_cmd = app.add_subcommand("realize", "Build a 2-tree with the given degree sequence");
  realize_cmd->add_option("SEQ", seq_tokens, "Sequence");
  realize_cmd->add_option("--file", seq_file, "Read the sequence from a file ('-' for stdin)");
  realize_cmd->add_option("--ell", ell, "Degree (>= 3) that must be adjacent to an ear; defaults to the maximum");
  realize_cmd->add_flag("--dot", dot, "Emit Graphviz DOT instead of an edge list");

  std::string graph_file;
  std::string verify_seq;
  auto* verify_cmd = app.add_subcommand("verify", "Check that an edge list is a 2-tree");
  verify_cmd->add_option("--graph", graph_file, "Edge list file ('-' for stdin)")->required();
  verify_cmd->add_option("--seq", verify_seq, "Expected degree sequence");
  verify_cmd->add_option("--ell", ell, "Require a vertex of this degree adjacent to an ear");

  std::size_t order = 0;
  bool with_graphs = false;
  auto* census_cmd = app.add_subcommand("census", "List the degree sequences of all 2-trees on N vertices");
  census_cmd->add_option("N", order, "Number of vertices")->required();
  census_cmd->add_flag("--graphs", with_graphs, "Also print every 2-tree as a canonical edge list");

  std::uint64_t seed = 1;
  auto* random_cmd = app.add_subcommand("random", "Generate a random 2-tree on N vertices");
  random_cmd->add_option("N", order, "Number of vertices")->required();
  random_cmd->add_option("--seed", seed, "Generator seed");

  Value k = 0;
  auto* ktree_cmd = app.add_subcommand("ktree-check", "Screen a sequence against the known necessary conditions for k-trees");
  ktree_cmd->add_option("-k", k, "Tree width parameter k >= 1")->required();
  ktree_cmd->add_option("SEQ", seq_tokens, "Sequence");
  ktree_cmd->add_option("--file", seq_file, "Read the sequence from a file ('-' for stdin)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (recognize_cmd->parsed()) {
      const DegreeSequence d = detail::sequence_input(seq_tokens, seq_file, in);
      const RecognitionVerdict v = recognize(d);
      if (v) {
        out << "2-tree: yes\n";
        return kSuccess;
      }
      out << "2-tree: no (condition " << condition_tag(*v.violated) << ")\n";
      return kRejected;
    }

    if (realize_cmd->parsed()) {
      const DegreeSequence d = detail::sequence_input(seq_tokens, seq_file, in);
      Realization r;
      try {
        r = realize(d, ell);
      } catch (const RejectedSequence& e) {
        err << "2-tree: no (condition " << condition_tag(e.condition()) << ")\n";
        return kRejected;
      }
      if (dot) {
        write_dot(out, r.graph);
        out << "// ";
      } else {
        write_edge_list(out, r.graph);
      }
      out << "ell-vertex=" << r.ell_vertex << " witness-ear=" << *r.witness_ear << '\n';
      return kSuccess;
    }

    if (verify_cmd->parsed()) {
      const SimpleGraph g = detail::graph_input(graph_file, in);
      const TwoTreeCheck check = is_two_tree(g);
      if (!check) {
        out << "2-tree: no (" << obstruction_name(check.obstruction) << ")\n";
        return kRejected;
      }
      out << "2-tree: yes\n";
      int code = kSuccess;
      if (!verify_seq.empty()) {
        const DegreeSequence expected = parse_sequence(verify_seq);
        const DegreeSequence actual = degree_sequence(g);
        if (expected == actual) {
          out << "sequence: match\n";
        } else {
          out << "sequence: mismatch (graph has " << to_string(actual) << ")\n";
          code = kRejected;
        }
      }
      if (ell) {
        if (auto w = find_ear_witness(g, *ell)) {
          out << "witness: vertex " << w->first << " of degree " << *ell << " is adjacent to ear " << w->second << '\n';
        } else {
          out << "witness: none for degree " << *ell << '\n';
          code = kRejected;
        }
      }
      return code;
    }

    if (census_cmd->parsed()) {
      const auto graphs = enumerate_two_trees(order);
      std::set<DegreeSequence> seqs;
      for (const auto& c : graphs) seqs.insert(degree_sequence(c.to_graph()));
      for (const auto& s : seqs) out << to_string(s) << '\n';
      if (with_graphs) {
        std::size_t i = 0;
        for (const auto& c : graphs) {
          const SimpleGraph g = c.to_graph();
          out << "\n# graph " << i++ << ": " << to_string(degree_sequence(g)) << '\n';
          write_edge_list(out, g);
        }
      }
      return kSuccess;
    }

    if (random_cmd->parsed()) {
      const SimpleGraph g = random_two_tree(order, seed);
      write_edge_list(out, g);
      out << "degrees: " << to_string(degree_sequence(g)) << '\n';
      return kSuccess;
    }

    if (ktree_cmd->parsed()) {
      const DegreeSequence d = detail::sequence_input(seq_tokens, seq_file, in);
      const auto violated = check_ktree_necessary(d, k);
      if (violated.empty()) {
        out << "passes all known necessary conditions (not sufficient for k ≥ 3)\n";
        return kSuccess;
      }
      for (KTreeCondition c : violated) out << "violates condition " << ktree_condition_tag(c) << '\n';
      return kRejected;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace twotree::cli
