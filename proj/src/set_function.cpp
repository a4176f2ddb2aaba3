#include "denopt/set_function.hpp"

#include <set>
#include <string>
#include <utility>

#include "denopt/errors.hpp"

namespace denopt {

SetFunctionOracle SetFunctionOracle::graph(GroundSet ground, std::vector<Edge> edges) {
    SetFunctionOracle f(std::move(ground), OracleKind::GraphEdgeCount);
    for (Edge& e : edges) e.w = 1;
    f.edges_ = std::move(edges);
    f.validate_edges();
    return f;
}

SetFunctionOracle SetFunctionOracle::weighted_graph(GroundSet ground, std::vector<Edge> edges) {
    SetFunctionOracle f(std::move(ground), OracleKind::WeightedGraphEdgeCount);
    f.edges_ = std::move(edges);
    f.validate_edges();
    return f;
}

SetFunctionOracle SetFunctionOracle::table(GroundSet ground, std::vector<Rational> values) {
    if (ground.size() > 24)
        throw CapExceededError("ExplicitTable: ground set too large for a full value table");
    SetFunctionOracle f(std::move(ground), OracleKind::ExplicitTable);
    f.table_ = std::move(values);
    if (f.table_.size() != (std::size_t{1} << f.n()))
        throw InvalidInstanceError("ExplicitTable: need exactly 2^n values");
    if (!f.table_[0].is_zero())
        throw InvalidInstanceError("ExplicitTable: f(empty set) must be 0");
    for (const Rational& v : f.table_)
        if (v.is_negative())
            throw InvalidInstanceError("ExplicitTable: values must be nonnegative");
    return f;
}

void SetFunctionOracle::validate_edges() const {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n() || e.v < 0 || e.v >= n())
            throw InvalidInstanceError("graph: edge endpoint out of range");
        if (e.u == e.v)
            throw InvalidInstanceError("graph: self-loops are forbidden");
        if (e.w < 0)
            throw InvalidInstanceError("graph: edge weights must be nonnegative");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw InvalidInstanceError("graph: duplicate edge " + std::to_string(e.u) + "-" +
                                       std::to_string(e.v));
    }
}

Rational SetFunctionOracle::eval(const Subset& s) const {
    if (s.ground_size() != n())
        throw std::invalid_argument("SetFunctionOracle::eval: wrong ground set");
    if (is_graph()) {
        long long total = 0;
        for (const Edge& e : edges_)
            if (s.contains(e.u) && s.contains(e.v)) total += e.w;
        return Rational(total);
    }
    return table_[s.to_mask()];
}

Rational SetFunctionOracle::eval_mask(std::uint64_t mask) const {
    if (is_graph()) return Rational(eval_graph_mask(mask));
    return table_[mask];
}

long long SetFunctionOracle::eval_graph_mask(std::uint64_t mask) const {
    long long total = 0;
    for (const Edge& e : edges_)
        if (((mask >> e.u) & 1) && ((mask >> e.v) & 1)) total += e.w;
    return total;
}

long long SetFunctionOracle::total_graph_weight() const {
    long long total = 0;
    for (const Edge& e : edges_) total += e.w;
    return total;
}

long long SetFunctionOracle::cross_weight(int v, const Subset& into) const {
    long long total = 0;
    for (const Edge& e : edges_) {
        if (e.u == v && into.contains(e.v)) total += e.w;
        if (e.v == v && into.contains(e.u)) total += e.w;
    }
    return total;
}

Rational density(const SetFunctionOracle& f, const Subset& s) {
    int size = s.cardinality();
    if (size == 0) throw EmptySubsetError("density: undefined for the empty set");
    return f.eval(s) / Rational(size);
}

MonotoneSupermodularReport check_monotone_supermodular(const SetFunctionOracle& f, int cap) {
    const int n = f.n();
    if (n > cap)
        throw CapExceededError("check_monotone_supermodular: " + std::to_string(n) +
                               " elements exceeds cap " + std::to_string(cap));
    MonotoneSupermodularReport report;
    const std::uint64_t limit = std::uint64_t{1} << n;

    std::vector<Rational> value(limit);
    for (std::uint64_t m = 0; m < limit; ++m) value[m] = f.eval_mask(m);

    // Monotone iff no single-element extension decreases f.
    for (std::uint64_t m = 0; m < limit && report.monotone; ++m) {
        for (int v = 0; v < n; ++v) {
            if ((m >> v) & 1) continue;
            std::uint64_t ext = m | (std::uint64_t{1} << v);
            if (value[m] > value[ext]) {
                report.monotone = false;
                report.witness = {Subset::from_mask(n, m), Subset::from_mask(n, ext)};
                break;
            }
        }
    }

    // Supermodular iff marginals never shrink: for disjoint u, v outside S,
    // f(S+u+v) - f(S+v) >= f(S+u) - f(S). A violation at (S, u, v) is exactly
    // a violating pair (A, B) = (S+u, S+v).
    for (std::uint64_t m = 0; m < limit && report.supermodular; ++m) {
        for (int u = 0; u < n && report.supermodular; ++u) {
            if ((m >> u) & 1) continue;
            for (int v = u + 1; v < n; ++v) {
                if ((m >> v) & 1) continue;
                std::uint64_t mu = m | (std::uint64_t{1} << u);
                std::uint64_t mv = m | (std::uint64_t{1} << v);
                std::uint64_t muv = mu | mv;
                if (value[mu] + value[mv] > value[muv] + value[m]) {
                    report.supermodular = false;
                    if (!report.witness)
                        report.witness = {Subset::from_mask(n, mu), Subset::from_mask(n, mv)};
                    break;
                }
            }
        }
    }
    return report;
}

}  // namespace denopt
