#include "denopt/density.hpp"

#include <string>

#include "denopt/errors.hpp"
#include "denopt/flow.hpp"

namespace denopt {

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::Auto: return "auto";
        case Engine::Flow: return "flow";
        case Engine::BruteForce: return "brute";
    }
    return "?";
}

namespace {

Engine resolve_engine(const SetFunctionOracle& f, Engine engine) {
    if (engine == Engine::Auto)
        return f.is_graph() ? Engine::Flow : Engine::BruteForce;
    if (engine == Engine::Flow && !f.is_graph())
        throw EngineMismatchError("flow engine requires a graph-backed set function");
    return engine;
}

long long checked_mul(long long a, long long b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX / 4 || p < INT64_MIN / 4)
        throw std::overflow_error("excess reduction: scaled weight out of range");
    return static_cast<long long>(p);
}

long long bonus_at(const ExcessQuery& q, int v) {
    return q.bonuses.empty() ? 0 : q.bonuses[v];
}

void validate_query(const SetFunctionOracle& f, const ExcessQuery& q) {
    const int n = f.n();
    if (q.forced.ground_size() != n || q.excluded.ground_size() != n)
        throw std::invalid_argument("maximize_excess: query over a different ground set");
    if (q.forced.intersects(q.excluded))
        throw std::invalid_argument("maximize_excess: forced and excluded sets overlap");
    if (!q.bonuses.empty() && static_cast<int>(q.bonuses.size()) != n)
        throw std::invalid_argument("maximize_excess: bonus vector must have one entry per element");
    for (long long b : q.bonuses)
        if (b < 0) throw std::invalid_argument("maximize_excess: bonuses must be nonnegative");
}

Rational query_value(const SetFunctionOracle& f, const ExcessQuery& q, const Subset& s) {
    long long bonus = 0;
    if (!q.bonuses.empty()) s.for_each([&](int v) { bonus += q.bonuses[v]; });
    return f.eval(s) + Rational(bonus) - q.alpha * Rational(s.cardinality());
}

ExcessResult maximize_excess_brute(const SetFunctionOracle& f, const ExcessQuery& q) {
    const int n = f.n();
    std::vector<int> candidates = (Subset::all(n) - q.forced - q.excluded).members();
    const int k = static_cast<int>(candidates.size());
    if (k > kBruteForceCap)
        throw CapExceededError("maximize_excess: " + std::to_string(k) +
                               " free elements exceeds brute-force cap " +
                               std::to_string(kBruteForceCap));

    ExcessResult best{q.forced, query_value(f, q, q.forced)};
    Subset tie_union = q.forced;
    for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << k); ++choice) {
        Subset s = q.forced;
        for (std::uint64_t w = choice; w != 0; w &= w - 1)
            s.add(candidates[std::countr_zero(w)]);
        Rational value = query_value(f, q, s);
        if (value > best.value) {
            best = {s, value};
            tie_union = s;
        } else if (value == best.value) {
            tie_union = tie_union | s;
        }
    }
    // For supermodular f the maximizers form a lattice, so their union is the
    // unique maximal maximizer.
    if (tie_union != best.set && query_value(f, q, tie_union) == best.value)
        best.set = tie_union;
    return best;
}

ExcessResult maximize_excess_flow(const SetFunctionOracle& f, const ExcessQuery& q) {
    const int n = f.n();
    const long long p = q.alpha.num();
    const long long scale = q.alpha.den();

    Subset candidates = Subset::all(n) - q.forced - q.excluded;
    std::vector<int> vertex_node(n, -1);
    ClosureInstance inst;
    candidates.for_each([&](int v) {
        vertex_node[v] = inst.node_count++;
        long long adjusted = bonus_at(q, v) + f.cross_weight(v, q.forced);
        inst.weights.push_back(checked_mul(scale, adjusted) - p);
    });

    // Offset from the contracted forced part: scale * (f(forced) + bonus(forced)) - p|forced|.
    long long forced_edges = 0;
    long long forced_bonus = 0;
    for (const Edge& e : f.edges())
        if (q.forced.contains(e.u) && q.forced.contains(e.v)) forced_edges += e.w;
    q.forced.for_each([&](int v) { forced_bonus += bonus_at(q, v); });
    const long long offset = checked_mul(scale, forced_edges + forced_bonus) -
                             checked_mul(p, q.forced.cardinality());

    if (inst.node_count == 0)
        return {q.forced, Rational(offset, scale)};

    for (const Edge& e : f.edges()) {
        if (e.w == 0) continue;
        if (vertex_node[e.u] < 0 || vertex_node[e.v] < 0) continue;
        int node = inst.node_count++;
        inst.weights.push_back(checked_mul(scale, e.w));
        inst.arcs.emplace_back(node, vertex_node[e.u]);
        inst.arcs.emplace_back(node, vertex_node[e.v]);
    }

    ClosureResult closure = max_weight_closure(inst);
    Subset chosen = q.forced;
    candidates.for_each([&](int v) {
        if (closure.closed_set.contains(vertex_node[v])) chosen.add(v);
    });
    return {chosen, Rational(closure.weight + offset, scale)};
}

}  // namespace

ExcessResult maximize_excess(const SetFunctionOracle& f, const ExcessQuery& q, Engine engine) {
    validate_query(f, q);
    return resolve_engine(f, engine) == Engine::Flow ? maximize_excess_flow(f, q)
                                                     : maximize_excess_brute(f, q);
}

DensityResult densest_subset(const SetFunctionOracle& f, const Subset& forced, Engine engine) {
    const int n = f.n();
    if (forced.ground_size() != n)
        throw std::invalid_argument("densest_subset: forced set over a different ground set");
    Engine resolved = resolve_engine(f, engine);

    ExcessQuery q(n);
    q.forced = forced;
    if (!forced.empty()) {
        q.alpha = density(f, forced);
    } else {
        q.alpha = Rational(0);
        for (int v = 0; v < n; ++v) {
            Rational single = f.eval(Subset::of(n, {v}));
            if (single > q.alpha) q.alpha = single;
        }
    }

    int iterations = 0;
    while (true) {
        ExcessResult step = maximize_excess(f, q, resolved);
        ++iterations;
        if (step.value.is_zero()) {
            if (step.set.empty())
                throw std::logic_error("densest_subset: empty maximizer at the optimum");
            return {step.set, q.alpha, resolved, iterations};
        }
        q.alpha = density(f, step.set);
    }
}

DensityResult densest_subset(const SetFunctionOracle& f, Engine engine) {
    return densest_subset(f, Subset(f.n()), engine);
}

namespace {

Rational marginal_ratio(const SetFunctionOracle& f, const Subset& d, const Subset& x) {
    return (f.eval(d | x) - f.eval(d)) / Rational(x.cardinality());
}

MarginalResult best_marginal_brute(const SetFunctionOracle& f, const Subset& d) {
    const int n = f.n();
    std::vector<int> candidates = d.complement().members();
    const int k = static_cast<int>(candidates.size());
    if (k > kBruteForceCap)
        throw CapExceededError("best_marginal: " + std::to_string(k) +
                               " free elements exceeds brute-force cap " +
                               std::to_string(kBruteForceCap));
    const Rational base = f.eval(d);

    Subset best_set(n);
    Rational best_ratio(0);
    Subset tie_union(n);
    bool have = false;
    for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << k); ++choice) {
        Subset x(n);
        for (std::uint64_t w = choice; w != 0; w &= w - 1)
            x.add(candidates[std::countr_zero(w)]);
        Rational ratio = (f.eval(d | x) - base) / Rational(x.cardinality());
        if (!have || ratio > best_ratio) {
            best_set = x;
            best_ratio = ratio;
            tie_union = x;
            have = true;
        } else if (ratio == best_ratio) {
            tie_union = tie_union | x;
        }
    }
    if (tie_union != best_set && marginal_ratio(f, d, tie_union) == best_ratio)
        best_set = tie_union;
    return {best_set, best_ratio, 1};
}

MarginalResult best_marginal_flow(const SetFunctionOracle& f, const Subset& d) {
    const int n = f.n();
    ExcessQuery q(n);
    q.excluded = d;
    q.bonuses.assign(n, 0);
    Subset rest = d.complement();
    rest.for_each([&](int v) { q.bonuses[v] = f.cross_weight(v, d); });

    // Marginal of a singleton {v} is just its cross weight, f({v}) being 0.
    q.alpha = Rational(0);
    rest.for_each([&](int v) {
        if (Rational(q.bonuses[v]) > q.alpha) q.alpha = Rational(q.bonuses[v]);
    });

    int iterations = 0;
    while (true) {
        ExcessResult step = maximize_excess(f, q, Engine::Flow);
        ++iterations;
        if (step.value.is_zero()) {
            if (step.set.empty())
                throw std::logic_error("best_marginal: empty maximizer at the optimum");
            return {step.set, q.alpha, iterations};
        }
        q.alpha = marginal_ratio(f, d, step.set);
    }
}

}  // namespace

MarginalResult best_marginal(const SetFunctionOracle& f, const Subset& d, Engine engine) {
    if (d.ground_size() != f.n())
        throw std::invalid_argument("best_marginal: set over a different ground set");
    if (d.cardinality() == f.n())
        throw GroundExhaustedError("best_marginal: no elements left outside the base set");
    return resolve_engine(f, engine) == Engine::Flow ? best_marginal_flow(f, d)
                                                     : best_marginal_brute(f, d);
}

}  // namespace denopt
