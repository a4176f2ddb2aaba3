#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "denopt/rational.hpp"
#include "denopt/subset.hpp"

namespace denopt {

enum class OracleKind { GraphEdgeCount, WeightedGraphEdgeCount, ExplicitTable };

struct Edge {
    int u;
    int v;
    long long w;
};

/// Evaluates a nonnegative set function f with f(empty) = 0. Graph-backed
/// oracles count (weighted) edges of the induced subgraph and are monotone
/// supermodular by construction; explicit tables hold arbitrary values and can
/// be screened with check_monotone_supermodular().
class SetFunctionOracle {
public:
    static SetFunctionOracle graph(GroundSet ground, std::vector<Edge> edges);
    static SetFunctionOracle weighted_graph(GroundSet ground, std::vector<Edge> edges);
    static SetFunctionOracle table(GroundSet ground, std::vector<Rational> values);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    OracleKind kind() const { return kind_; }
    bool is_graph() const { return kind_ != OracleKind::ExplicitTable; }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Rational>& table() const { return table_; }

    Rational eval(const Subset& s) const;
    Rational eval_mask(std::uint64_t mask) const;

    /// Integer fast path (graph kinds only): total weight of edges inside the mask.
    long long eval_graph_mask(std::uint64_t mask) const;
    long long total_graph_weight() const;

    /// Total weight of edges between v and the given set, v excluded from the set.
    long long cross_weight(int v, const Subset& into) const;

private:
    SetFunctionOracle(GroundSet ground, OracleKind kind)
        : ground_(std::move(ground)), kind_(kind) {}
    void validate_edges() const;

    GroundSet ground_;
    OracleKind kind_;
    std::vector<Edge> edges_;
    std::vector<Rational> table_;
};

/// f(s) / |s|, exact.
Rational density(const SetFunctionOracle& f, const Subset& s);

struct MonotoneSupermodularReport {
    bool monotone = true;
    bool supermodular = true;
    /// First violating (A, B) pair: f(A) > f(B) with A subset of B for a
    /// monotonicity failure, f(A)+f(B) > f(A|B)+f(A&B) for a supermodularity one.
    std::optional<std::pair<Subset, Subset>> witness;
};

/// Exhaustive validation of an oracle, feasible up to the given element cap.
/// Monotonicity is checked through single-element extensions and
/// supermodularity through pairwise marginals, which is equivalent to checking
/// every (A, B) pair.
MonotoneSupermodularReport check_monotone_supermodular(const SetFunctionOracle& f,
                                                       int cap = 16);

}  // namespace denopt
