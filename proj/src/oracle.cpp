#include "denopt/oracle.hpp"

#include <bit>
#include <string>
#include <utility>

#include "denopt/errors.hpp"

namespace denopt {

ProblemConstraint ProblemConstraint::unconstrained() {
    return ProblemConstraint(Kind::Unconstrained);
}

ProblemConstraint ProblemConstraint::comatroid(MatroidOracle m) {
    ProblemConstraint c(Kind::CoMatroid);
    c.matroid_ = std::move(m);
    return c;
}

ProblemConstraint ProblemConstraint::knapsack(KnapsackConstraint k) {
    ProblemConstraint c(Kind::Knapsack);
    c.knapsack_ = std::move(k);
    return c;
}

ProblemConstraint ProblemConstraint::subset_req(Subset a) {
    ProblemConstraint c(Kind::SubsetReq);
    c.required_ = std::move(a);
    return c;
}

ProblemConstraint ProblemConstraint::closure(DependencyDigraph d) {
    ProblemConstraint c(Kind::Closure);
    c.digraph_ = std::move(d);
    return c;
}

ProblemConstraint ProblemConstraint::combo(MatroidOracle m, Subset a) {
    ProblemConstraint c(Kind::Combo);
    c.matroid_ = std::move(m);
    c.required_ = std::move(a);
    return c;
}

bool ProblemConstraint::feasible_mask(std::uint64_t mask, int n) const {
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    switch (kind_) {
        case Kind::Unconstrained:
            return true;
        case Kind::CoMatroid:
            return matroid_->is_independent_mask(full & ~mask);
        case Kind::Knapsack: {
            long long total = 0;
            for (std::uint64_t w = mask; w != 0; w &= w - 1)
                total += knapsack_->weights[std::countr_zero(w)];
            return total >= knapsack_->threshold;
        }
        case Kind::SubsetReq:
            return (required_->to_mask() & ~mask) == 0;
        case Kind::Closure:
            return digraph_->is_closed_mask(mask);
        case Kind::Combo:
            return (required_->to_mask() & ~mask) == 0 &&
                   matroid_->is_independent_mask(full & ~mask);
    }
    return false;
}

namespace {

// Lexicographic order on the sorted id sequences of two masks.
bool lex_less_mask(std::uint64_t a, std::uint64_t b) {
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a);
        int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

}  // namespace

BruteForceReport brute_optimum(const SetFunctionOracle& f, const ProblemConstraint& constraint) {
    const int n = f.n();
    if (n > kOracleCap)
        throw CapExceededError("brute_optimum: " + std::to_string(n) +
                               " elements exceeds oracle cap " + std::to_string(kOracleCap));

    // Graph values over all masks by one incremental sweep; tables are direct.
    std::vector<long long> graph_value;
    if (f.is_graph()) {
        graph_value.assign(std::size_t{1} << n, 0);
        std::vector<std::vector<std::pair<int, long long>>> adj(n);
        for (const Edge& e : f.edges()) {
            adj[e.u].push_back({e.v, e.w});
            adj[e.v].push_back({e.u, e.w});
        }
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            int v = std::countr_zero(mask);
            std::uint64_t rest = mask & (mask - 1);
            long long cross = 0;
            for (const auto& [u, w] : adj[v])
                if ((rest >> u) & 1) cross += w;
            graph_value[mask] = graph_value[rest] + cross;
        }
    }
    auto value_of = [&](std::uint64_t mask) {
        return f.is_graph() ? Rational(graph_value[mask]) : f.table()[mask];
    };

    long long feasible_count = 0;
    bool have = false;
    std::uint64_t best_mask = 0;
    Rational best_density(0);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        if (!constraint.feasible_mask(mask, n)) continue;
        ++feasible_count;
        Rational dens = value_of(mask) / Rational(std::popcount(mask));
        if (!have) {
            have = true;
            best_mask = mask;
            best_density = dens;
            continue;
        }
        if (dens > best_density) {
            best_mask = mask;
            best_density = dens;
        } else if (dens == best_density) {
            int pc_new = std::popcount(mask);
            int pc_old = std::popcount(best_mask);
            if (pc_new > pc_old || (pc_new == pc_old && lex_less_mask(mask, best_mask)))
                best_mask = mask;
        }
    }
    if (!have)
        throw InfeasibleInstanceError("brute_optimum: no nonempty feasible subset exists");
    return {Subset::from_mask(n, best_mask), best_density, feasible_count,
            static_cast<long long>(limit - 1)};
}

}  // namespace denopt
