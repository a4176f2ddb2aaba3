#pragma once

#include <vector>

#include "denopt/density.hpp"
#include "denopt/matroid.hpp"
#include "denopt/rational.hpp"
#include "denopt/set_function.hpp"
#include "denopt/subset.hpp"

namespace denopt {

/// Knapsack covering constraint: S is feasible iff its elements' weights sum
/// to at least the threshold.
struct KnapsackConstraint {
    std::vector<long long> weights;
    long long threshold = 0;

    long long weight(const Subset& s) const;
    bool feasible(const Subset& s) const { return weight(s) >= threshold; }
    long long total_weight() const;
};

struct ChainStep {
    Subset h;                   // H_i, the set added at step i
    Subset d;                   // D_i = D_{i-1} + H_i
    Rational marginal_density;  // density(D_1) for i=1, else (f(D_i)-f(D_{i-1}))/|H_i|
};

struct AugmentedStep {
    Subset d_prime;  // D_i extended to a feasible set
    Rational density;
};

/// Full record of one greedy run. The chain invariants (non-increasing
/// marginals, prefix density dominating the marginal) are verified on every
/// run before the result is returned.
struct GreedyTrace {
    std::vector<ChainStep> chain;
    std::vector<AugmentedStep> augmented;
    int chosen_index = 0;  // index into `augmented` of the winning prefix
};

struct GreedyResult {
    DensityResult result;
    GreedyTrace trace;
};

/// 2-approximation for densest subset under a co-matroid constraint:
/// grow prefixes by best marginal density while infeasible, then extend every
/// prefix to feasibility with a minimum-cardinality completion and keep the
/// densest extension.
GreedyResult den_m_greedy(const SetFunctionOracle& f, const MatroidOracle& m,
                          Engine engine = Engine::Auto);

/// 3-approximation under a knapsack covering constraint; prefixes are
/// completed with the heaviest remaining elements.
GreedyResult den_knapsack_greedy(const SetFunctionOracle& f, const KnapsackConstraint& c,
                                 Engine engine = Engine::Auto);

/// 2-approximation under combined subset + co-matroid constraints: the first
/// prefix is the densest set containing `a`, everything else as den_m_greedy.
GreedyResult den_combo_greedy(const SetFunctionOracle& f, const MatroidOracle& m,
                              const Subset& a, Engine engine = Engine::Auto);

}  // namespace denopt
