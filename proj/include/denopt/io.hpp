#pragma once

#include <iosfwd>
#include <string>

#include "denopt/closure.hpp"
#include "denopt/constrained.hpp"
#include "denopt/matroid.hpp"
#include "denopt/set_function.hpp"

namespace denopt {

/// Parses "p/q" or a plain integer; used by the table format and tests.
Rational parse_rational(const std::string& text);

// Every loader throws FormatError with "file:line" context on malformed input.

/// Graph file: "n m" then m lines "u v" or "u v w" (0-based ids, positive
/// integer weights, no duplicates or self-loops). Returns a GraphEdgeCount
/// oracle when no explicit weights appear, WeightedGraphEdgeCount otherwise.
SetFunctionOracle load_graph(const std::string& path);
SetFunctionOracle read_graph(std::istream& in, const std::string& name);

/// Table file: "n" then 2^n lines "mask value", each mask exactly once.
SetFunctionOracle load_table(const std::string& path);
SetFunctionOracle read_table(std::istream& in, const std::string& name);

/// Matroid spec (JSON): {"type":"cardinality","r":K} |
/// {"type":"partition","blocks":[[ids...],...],"limits":[r1,...]} |
/// {"type":"explicit","independent":[[ids...],...]}.
MatroidOracle load_matroid(const std::string& path, const GroundSet& ground);
MatroidOracle read_matroid(std::istream& in, const std::string& name, const GroundSet& ground);

/// Weights file: one "id weight" pair per line; ids not listed weigh 0.
KnapsackConstraint load_weights(const std::string& path, int n, long long threshold);
KnapsackConstraint read_weights(std::istream& in, const std::string& name, int n,
                                long long threshold);

/// Arcs file: one "a b" pair per line, meaning a in S forces b in S.
DependencyDigraph load_arcs(const std::string& path, const GroundSet& ground);
DependencyDigraph read_arcs(std::istream& in, const std::string& name, const GroundSet& ground);

}  // namespace denopt
