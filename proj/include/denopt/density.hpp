#pragma once

#include <vector>

#include "denopt/rational.hpp"
#include "denopt/set_function.hpp"
#include "denopt/subset.hpp"

namespace denopt {

enum class Engine { Auto, Flow, BruteForce };

const char* engine_name(Engine e);

/// Subsets enumerated by the brute-force engines are capped at 2^24.
inline constexpr int kBruteForceCap = 24;

struct DensityResult {
    Subset best_set;
    Rational best_density;
    Engine engine;
    int iterations;  // parametric steps taken
};

/// Query for the excess-maximization primitive g(alpha, S) = f(S) - alpha|S|,
/// optionally pinning elements in or out and adding a per-element linear bonus.
struct ExcessQuery {
    Rational alpha;
    Subset forced;
    Subset excluded;
    std::vector<long long> bonuses;  // empty means all zero; else one per element

    explicit ExcessQuery(int ground_size)
        : alpha(0), forced(ground_size), excluded(ground_size) {}
};

struct ExcessResult {
    Subset set;
    Rational value;
};

/// Maximizes f(S) + bonuses(S) - alpha|S| over forced <= S <= U - excluded.
/// Among ties returns the maximal maximizer. The flow engine requires a
/// graph-backed oracle and solves one min cut on the project-selection graph
/// with forced vertices contracted into the source.
ExcessResult maximize_excess(const SetFunctionOracle& f, const ExcessQuery& q,
                             Engine engine = Engine::Auto);

/// Exact max of f(S)/|S| over nonempty S containing `forced`, by Dinkelbach
/// iteration: alternately maximize the excess at the current alpha and raise
/// alpha to the achieved density. Terminates after at most n+1 steps because
/// the maximal maximizers shrink strictly.
DensityResult densest_subset(const SetFunctionOracle& f, const Subset& forced,
                             Engine engine = Engine::Auto);
DensityResult densest_subset(const SetFunctionOracle& f, Engine engine = Engine::Auto);

struct MarginalResult {
    Subset set;
    Rational marginal_density;
    int iterations;
};

/// Maximizes (f(d + X) - f(d)) / |X| over nonempty X disjoint from d. For
/// graph oracles the marginal term becomes a per-vertex bonus of cross-edge
/// weight into d, so the same parametric engine applies.
MarginalResult best_marginal(const SetFunctionOracle& f, const Subset& d,
                             Engine engine = Engine::Auto);

}  // namespace denopt
