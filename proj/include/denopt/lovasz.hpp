#pragma once

#include <vector>

#include "denopt/rational.hpp"
#include "denopt/set_function.hpp"
#include "denopt/subset.hpp"

namespace denopt {

/// The canonical decomposition of a point x in [0,1]^n over the nested level
/// sets S_0 = {} up to S_n = U: x = sum_i lambda_i * 1_{S_i} with lambda_i >= 0
/// summing to 1.
struct LovaszCoefficients {
    std::vector<int> order;         // elements sorted by non-increasing coordinate, ties id ascending
    std::vector<Rational> lambdas;  // n+1 coefficients, lambdas[i] weights f(S_i)
    std::vector<Subset> prefixes;   // S_0 .. S_n
};

/// Decomposes x; throws CoordinateOutOfRange if any coordinate leaves [0, 1].
LovaszCoefficients lovasz_coefficients(int n, const std::vector<Rational>& x);

/// Value of the Lovasz extension of f at x: sum_i lambda_i * f(S_i).
Rational lovasz_extension(const SetFunctionOracle& f, const std::vector<Rational>& x);

}  // namespace denopt
