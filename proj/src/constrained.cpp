#include "denopt/constrained.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "denopt/errors.hpp"

namespace denopt {

long long KnapsackConstraint::weight(const Subset& s) const {
    long long total = 0;
    s.for_each([&](int v) {
        if (v < static_cast<int>(weights.size())) total += weights[v];
    });
    return total;
}

long long KnapsackConstraint::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0LL);
}

namespace {

using FeasiblePred = std::function<bool(const Subset&)>;
using AugmentFn = std::function<Subset(const Subset&)>;

void check_chain_invariants(const SetFunctionOracle& f, const GreedyTrace& trace) {
    for (std::size_t i = 0; i < trace.chain.size(); ++i) {
        const ChainStep& step = trace.chain[i];
        if (i > 0) {
            if (step.h.intersects(trace.chain[i - 1].d))
                throw std::logic_error("greedy chain: increment overlaps the prefix");
            if (step.marginal_density > trace.chain[i - 1].marginal_density)
                throw std::logic_error("greedy chain: marginal densities increased");
        }
        if (density(f, step.d) < step.marginal_density)
            throw std::logic_error("greedy chain: prefix density fell below its marginal");
    }
}

GreedyResult run_greedy(const SetFunctionOracle& f, Engine engine, const DensityResult& first,
                        const FeasiblePred& feasible, const AugmentFn& augment) {
    GreedyTrace trace;
    int iterations = first.iterations;

    trace.chain.push_back({first.best_set, first.best_set, first.best_density});
    while (!feasible(trace.chain.back().d)) {
        const Subset& d = trace.chain.back().d;
        MarginalResult step = best_marginal(f, d, engine);
        iterations += step.iterations;
        trace.chain.push_back({step.set, d | step.set, step.marginal_density});
    }
    check_chain_invariants(f, trace);

    for (const ChainStep& step : trace.chain) {
        Subset extended = augment(step.d);
        trace.augmented.push_back({extended, density(f, extended)});
    }
    trace.chosen_index = 0;
    for (std::size_t i = 1; i < trace.augmented.size(); ++i)
        if (trace.augmented[i].density > trace.augmented[trace.chosen_index].density)
            trace.chosen_index = static_cast<int>(i);

    const AugmentedStep& chosen = trace.augmented[trace.chosen_index];
    Engine resolved = first.engine;
    return {{chosen.d_prime, chosen.density, resolved, iterations}, trace};
}

}  // namespace

GreedyResult den_m_greedy(const SetFunctionOracle& f, const MatroidOracle& m, Engine engine) {
    return den_combo_greedy(f, m, Subset(f.n()), engine);
}

GreedyResult den_combo_greedy(const SetFunctionOracle& f, const MatroidOracle& m,
                              const Subset& a, Engine engine) {
    if (m.n() != f.n())
        throw std::invalid_argument("den_combo_greedy: matroid over a different ground set");
    DensityResult first = densest_subset(f, a, engine);
    auto feasible = [&](const Subset& s) { return m.is_feasible_comatroid(s); };
    auto augment = [&](const Subset& d) { return d | m.solve_extension(d); };
    return run_greedy(f, first.engine, first, feasible, augment);
}

GreedyResult den_knapsack_greedy(const SetFunctionOracle& f, const KnapsackConstraint& c,
                                 Engine engine) {
    const int n = f.n();
    if (static_cast<int>(c.weights.size()) != n)
        throw std::invalid_argument("den_knapsack_greedy: one weight per element required");
    for (long long w : c.weights)
        if (w < 0) throw std::invalid_argument("den_knapsack_greedy: weights must be nonnegative");
    if (c.total_weight() < c.threshold)
        throw InfeasibleInstanceError("knapsack: total weight below the threshold");

    DensityResult first = densest_subset(f, Subset(n), engine);
    auto feasible = [&](const Subset& s) { return c.feasible(s); };
    auto augment = [&](const Subset& d) {
        if (c.feasible(d)) return d;
        std::vector<int> outside = (Subset::all(n) - d).members();
        std::stable_sort(outside.begin(), outside.end(), [&](int x, int y) {
            if (c.weights[x] != c.weights[y]) return c.weights[x] > c.weights[y];
            return x < y;
        });
        Subset extended = d;
        long long total = c.weight(d);
        for (int v : outside) {
            if (total >= c.threshold) break;
            extended.add(v);
            total += c.weights[v];
        }
        return extended;
    };
    return run_greedy(f, first.engine, first, feasible, augment);
}

}  // namespace denopt
