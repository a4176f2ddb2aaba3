#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "denopt/density.hpp"
#include "denopt/set_function.hpp"
#include "denopt/subset.hpp"

namespace denopt {

/// Dependency digraph over the ground set: an arc (a, b) means choosing a
/// forces choosing b. Feasible sets are the closed ones (no arc leaves them);
/// they form a lattice under union and intersection.
class DependencyDigraph {
public:
    DependencyDigraph(GroundSet ground, std::vector<std::pair<int, int>> arcs);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    bool is_closed(const Subset& s) const;
    bool is_closed_mask(std::uint64_t mask) const;

private:
    GroundSet ground_;
    std::vector<std::pair<int, int>> arcs_;  // deduplicated, self-arcs dropped
};

/// Exact densest nonempty closed set. The flow engine runs the Dinkelbach loop
/// with each excess maximization solved as a max-weight closure (vertex nodes
/// cost the scaled alpha, edge nodes pay their weight and depend on their
/// endpoints, dependency arcs are infinite); the brute engine enumerates
/// closed sets directly.
DensityResult densest_closure(const SetFunctionOracle& f, const DependencyDigraph& d,
                              Engine engine = Engine::Auto);

}  // namespace denopt
