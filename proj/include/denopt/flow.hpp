#pragma once

#include <utility>
#include <vector>

#include "denopt/subset.hpp"

namespace denopt {

/// Directed network with integer capacities. Infinite arcs are realized at
/// solve time as a sentinel strictly above the sum of all finite capacities,
/// so they can never lie on a minimum cut unless no finite cut exists.
class FlowNetwork {
public:
    struct Arc {
        int tail;
        int head;
        long long capacity;  // ignored when infinite
        bool infinite;
    };

    FlowNetwork(int node_count, int source, int sink);

    void add_arc(int tail, int head, long long capacity);
    void add_infinite_arc(int tail, int head);

    int node_count() const { return node_count_; }
    int source() const { return source_; }
    int sink() const { return sink_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

private:
    void check_node(int v) const;

    int node_count_;
    int source_;
    int sink_;
    std::vector<Arc> arcs_;
};

struct ArcFlow {
    int tail;
    int head;
    long long capacity;
    bool infinite;
    long long flow;
};

struct MaxFlowResult {
    long long value;
    /// Source side of a minimum cut, the maximal one: a node is on the sink
    /// side iff it reaches the sink in the residual network.
    Subset cut_source_side;
    std::vector<ArcFlow> arc_flows;
};

/// Dinic's algorithm. Throws NoFiniteCut when every source-sink cut crosses an
/// infinite arc.
MaxFlowResult max_flow(const FlowNetwork& net);

/// Node-weighted dependency instance: choosing u forces choosing v for every
/// arc (u, v); a valid selection is a closed set.
struct ClosureInstance {
    int node_count = 0;
    std::vector<long long> weights;
    std::vector<std::pair<int, int>> arcs;
};

struct ClosureResult {
    Subset closed_set;
    long long weight;
};

/// Maximum-weight closed set via the project-selection min-cut reduction;
/// among maximizers returns the maximal one. The empty set is always closed,
/// so the optimum weight is nonnegative.
ClosureResult max_weight_closure(const ClosureInstance& inst);

}  // namespace denopt
