#include "denopt/closure.hpp"

#include <set>
#include <string>

#include "denopt/errors.hpp"
#include "denopt/flow.hpp"

namespace denopt {

DependencyDigraph::DependencyDigraph(GroundSet ground, std::vector<std::pair<int, int>> arcs)
    : ground_(std::move(ground)) {
    std::set<std::pair<int, int>> unique;
    for (const auto& [a, b] : arcs) {
        if (a < 0 || a >= n() || b < 0 || b >= n())
            throw InvalidInstanceError("dependency digraph: arc endpoint out of range");
        if (a == b) continue;
        if (unique.insert({a, b}).second) arcs_.push_back({a, b});
    }
}

bool DependencyDigraph::is_closed(const Subset& s) const {
    for (const auto& [a, b] : arcs_)
        if (s.contains(a) && !s.contains(b)) return false;
    return true;
}

bool DependencyDigraph::is_closed_mask(std::uint64_t mask) const {
    for (const auto& [a, b] : arcs_)
        if (((mask >> a) & 1) && !((mask >> b) & 1)) return false;
    return true;
}

namespace {

long long checked_mul(long long a, long long b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX / 4 || p < INT64_MIN / 4)
        throw std::overflow_error("closure reduction: scaled weight out of range");
    return static_cast<long long>(p);
}

/// Maximal maximizer of scale*f(S) - p|S| over closed S, with the achieved
/// value returned as an exact rational.
ExcessResult closed_excess_max(const SetFunctionOracle& f, const DependencyDigraph& d,
                               const Rational& alpha) {
    const int n = f.n();
    const long long p = alpha.num();
    const long long scale = alpha.den();

    ClosureInstance inst;
    inst.node_count = n;
    inst.weights.assign(n, -p);
    for (const auto& [a, b] : d.arcs()) inst.arcs.emplace_back(a, b);
    for (const Edge& e : f.edges()) {
        if (e.w == 0) continue;
        int node = inst.node_count++;
        inst.weights.push_back(checked_mul(scale, e.w));
        inst.arcs.emplace_back(node, e.u);
        inst.arcs.emplace_back(node, e.v);
    }

    ClosureResult closure = max_weight_closure(inst);
    Subset chosen(n);
    closure.closed_set.for_each([&](int v) {
        if (v < n) chosen.add(v);
    });
    return {chosen, Rational(closure.weight, scale)};
}

DensityResult densest_closure_flow(const SetFunctionOracle& f, const DependencyDigraph& d) {
    Rational alpha(0);
    Subset incumbent(f.n());
    int iterations = 0;
    while (true) {
        ExcessResult step = closed_excess_max(f, d, alpha);
        ++iterations;
        if (step.value.is_zero()) {
            // A nonempty maximizer attains density alpha exactly; if only the
            // empty set remains, the incumbent from the previous step is optimal.
            if (!step.set.empty()) return {step.set, alpha, Engine::Flow, iterations};
            if (incumbent.empty())
                throw std::logic_error("densest_closure: no nonempty maximizer found");
            return {incumbent, alpha, Engine::Flow, iterations};
        }
        incumbent = step.set;
        alpha = density(f, incumbent);
    }
}

DensityResult densest_closure_brute(const SetFunctionOracle& f, const DependencyDigraph& d) {
    const int n = f.n();
    if (n > kBruteForceCap)
        throw CapExceededError("densest_closure: " + std::to_string(n) +
                               " elements exceeds brute-force cap " +
                               std::to_string(kBruteForceCap));
    bool have = false;
    Rational best(0);
    std::uint64_t best_mask = 0;
    std::uint64_t tie_union = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (!d.is_closed_mask(mask)) continue;
        Rational dens = f.eval_mask(mask) / Rational(std::popcount(mask));
        if (!have || dens > best) {
            best = dens;
            best_mask = mask;
            tie_union = mask;
            have = true;
        } else if (dens == best) {
            tie_union |= mask;
        }
    }
    if (!have) throw std::logic_error("densest_closure: the full set must be closed");
    // Maximizers of a supermodular density form a union-closed family.
    if (tie_union != best_mask &&
        f.eval_mask(tie_union) / Rational(std::popcount(tie_union)) == best)
        best_mask = tie_union;
    return {Subset::from_mask(n, best_mask), best, Engine::BruteForce, 1};
}

}  // namespace

DensityResult densest_closure(const SetFunctionOracle& f, const DependencyDigraph& d,
                              Engine engine) {
    if (d.n() != f.n())
        throw std::invalid_argument("densest_closure: digraph over a different ground set");
    Engine resolved = engine == Engine::Auto
                          ? (f.is_graph() ? Engine::Flow : Engine::BruteForce)
                          : engine;
    if (resolved == Engine::Flow && !f.is_graph())
        throw EngineMismatchError("densest_closure: flow engine requires a graph oracle");
    return resolved == Engine::Flow ? densest_closure_flow(f, d) : densest_closure_brute(f, d);
}

}  // namespace denopt
