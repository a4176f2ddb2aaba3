#include "denopt/lovasz.hpp"

#include <algorithm>
#include <numeric>

#include "denopt/errors.hpp"

namespace denopt {

LovaszCoefficients lovasz_coefficients(int n, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("lovasz_coefficients: coordinate count must equal n");
    const Rational zero(0), one(1);
    for (const Rational& c : x)
        if (c < zero || c > one)
            throw CoordinateOutOfRangeError("lovasz_coefficients: coordinate outside [0, 1]");

    LovaszCoefficients out;
    out.order.resize(n);
    std::iota(out.order.begin(), out.order.end(), 0);
    std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        if (x[a] != x[b]) return x[b] < x[a];
        return a < b;
    });

    out.prefixes.reserve(n + 1);
    Subset prefix(n);
    out.prefixes.push_back(prefix);
    for (int v : out.order) {
        prefix.add(v);
        out.prefixes.push_back(prefix);
    }

    out.lambdas.resize(n + 1);
    out.lambdas[0] = one - x[out.order[0]];
    for (int i = 1; i < n; ++i) out.lambdas[i] = x[out.order[i - 1]] - x[out.order[i]];
    out.lambdas[n] = x[out.order[n - 1]];
    return out;
}

Rational lovasz_extension(const SetFunctionOracle& f, const std::vector<Rational>& x) {
    LovaszCoefficients c = lovasz_coefficients(f.n(), x);
    Rational value(0);
    for (int i = 0; i <= f.n(); ++i) {
        if (c.lambdas[i].is_zero()) continue;
        value += c.lambdas[i] * f.eval(c.prefixes[i]);
    }
    return value;
}

}  // namespace denopt
