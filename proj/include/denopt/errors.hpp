#pragma once

#include <stdexcept>
#include <string>

namespace denopt {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// density() was asked for the density of the empty set.
struct EmptySubsetError : Error {
    using Error::Error;
};

// A brute-force operation was asked to enumerate more subsets than its cap allows.
struct CapExceededError : Error {
    using Error::Error;
};

// A Lovasz extension coordinate lies outside [0, 1].
struct CoordinateOutOfRangeError : Error {
    using Error::Error;
};

// The flow engine was requested for a set function that is not graph-backed.
struct EngineMismatchError : Error {
    using Error::Error;
};

// best_marginal() was called with nothing left to add.
struct GroundExhaustedError : Error {
    using Error::Error;
};

// The instance has no feasible solution (e.g. knapsack threshold above total weight).
struct InfeasibleInstanceError : Error {
    using Error::Error;
};

// Every source-sink cut of the flow network crosses an infinite arc.
struct NoFiniteCutError : Error {
    using Error::Error;
};

// An instance failed construction-time validation (bad graph, table, or matroid family).
struct InvalidInstanceError : Error {
    using Error::Error;
};

// A problem in an input file; the message carries "file:line".
struct FormatError : Error {
    FormatError(const std::string& file, int line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what) {}
    explicit FormatError(const std::string& what) : Error(what) {}
};

}  // namespace denopt
