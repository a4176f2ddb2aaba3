#pragma once

#include <cstdint>
#include <optional>

#include "denopt/closure.hpp"
#include "denopt/constrained.hpp"
#include "denopt/matroid.hpp"
#include "denopt/rational.hpp"
#include "denopt/set_function.hpp"
#include "denopt/subset.hpp"

namespace denopt {

/// Feasibility predicate for one problem variant, used by the brute oracle.
class ProblemConstraint {
public:
    enum class Kind { Unconstrained, CoMatroid, Knapsack, SubsetReq, Closure, Combo };

    static ProblemConstraint unconstrained();
    static ProblemConstraint comatroid(MatroidOracle m);
    static ProblemConstraint knapsack(KnapsackConstraint c);
    static ProblemConstraint subset_req(Subset a);
    static ProblemConstraint closure(DependencyDigraph d);
    static ProblemConstraint combo(MatroidOracle m, Subset a);

    Kind kind() const { return kind_; }
    bool feasible_mask(std::uint64_t mask, int n) const;

private:
    explicit ProblemConstraint(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::optional<MatroidOracle> matroid_;
    std::optional<KnapsackConstraint> knapsack_;
    std::optional<Subset> required_;
    std::optional<DependencyDigraph> digraph_;
};

struct BruteForceReport {
    Subset opt_set;
    Rational opt_density;
    long long feasible_count;
    long long enumerated;
};

/// Caps brute_optimum; beyond this the enumeration refuses to run.
inline constexpr int kOracleCap = 20;

/// Ground truth by exhaustive enumeration of all nonempty subsets. Ties are
/// broken toward larger cardinality, then the lexicographically smallest id
/// sequence, so reports are deterministic.
BruteForceReport brute_optimum(const SetFunctionOracle& f, const ProblemConstraint& constraint);

}  // namespace denopt
