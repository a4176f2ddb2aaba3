#include "denopt/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "denopt/errors.hpp"

namespace denopt {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : node_count_(node_count), source_(source), sink_(sink) {
    if (node_count < 2) throw InvalidInstanceError("FlowNetwork: need at least two nodes");
    check_node(source);
    check_node(sink);
    if (source == sink) throw InvalidInstanceError("FlowNetwork: source and sink must differ");
}

void FlowNetwork::add_arc(int tail, int head, long long capacity) {
    check_node(tail);
    check_node(head);
    if (capacity < 0) throw InvalidInstanceError("FlowNetwork: negative capacity");
    arcs_.push_back({tail, head, capacity, false});
}

void FlowNetwork::add_infinite_arc(int tail, int head) {
    check_node(tail);
    check_node(head);
    arcs_.push_back({tail, head, 0, true});
}

void FlowNetwork::check_node(int v) const {
    if (v < 0 || v >= node_count_) throw InvalidInstanceError("FlowNetwork: node out of range");
}

namespace {

// Dinic with the usual paired-edge residual representation.
class Dinic {
public:
    explicit Dinic(int n) : adj_(n), level_(n), iter_(n) {}

    int add_edge(int from, int to, long long cap) {
        int id = static_cast<int>(to_.size());
        adj_[from].push_back(id);
        to_.push_back(to);
        cap_.push_back(cap);
        adj_[to].push_back(id + 1);
        to_.push_back(from);
        cap_.push_back(0);
        return id;
    }

    long long run(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            while (long long pushed = dfs(s, t, std::numeric_limits<long long>::max()))
                flow += pushed;
        }
        return flow;
    }

    long long residual(int edge_id) const { return cap_[edge_id]; }

    /// Nodes with a residual path to t, found by walking residual arcs backward.
    std::vector<bool> sink_reaching(int t) const {
        std::vector<bool> reaches(adj_.size(), false);
        reaches[t] = true;
        std::queue<int> q;
        q.push(t);
        while (!q.empty()) {
            int y = q.front();
            q.pop();
            for (int e : adj_[y]) {
                // The paired edge of e carries the residual of (to_[e] -> y).
                int x = to_[e];
                if (!reaches[x] && cap_[e ^ 1] > 0) {
                    reaches[x] = true;
                    q.push(x);
                }
            }
        }
        return reaches;
    }

private:
    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : adj_[v]) {
                if (cap_[e] > 0 && level_[to_[e]] < 0) {
                    level_[to_[e]] = level_[v] + 1;
                    q.push(to_[e]);
                }
            }
        }
        return level_[t] >= 0;
    }

    long long dfs(int v, int t, long long limit) {
        if (v == t) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            int e = adj_[v][i];
            int u = to_[e];
            if (cap_[e] <= 0 || level_[u] != level_[v] + 1) continue;
            long long pushed = dfs(u, t, std::min(limit, cap_[e]));
            if (pushed > 0) {
                cap_[e] -= pushed;
                cap_[e ^ 1] += pushed;
                return pushed;
            }
        }
        level_[v] = -1;
        return 0;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> to_;
    std::vector<long long> cap_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
    long long finite_sum = 0;
    for (const auto& arc : net.arcs())
        if (!arc.infinite) finite_sum += arc.capacity;
    const long long kInf = finite_sum + 1;

    Dinic dinic(net.node_count());
    std::vector<int> edge_ids;
    edge_ids.reserve(net.arcs().size());
    for (const auto& arc : net.arcs())
        edge_ids.push_back(dinic.add_edge(arc.tail, arc.head, arc.infinite ? kInf : arc.capacity));

    long long value = dinic.run(net.source(), net.sink());
    if (value >= kInf) throw NoFiniteCutError("max_flow: every source-sink cut is infinite");

    std::vector<bool> reaches = dinic.sink_reaching(net.sink());
    Subset source_side(net.node_count());
    for (int v = 0; v < net.node_count(); ++v)
        if (!reaches[v]) source_side.add(v);

    MaxFlowResult result{value, source_side, {}};
    result.arc_flows.reserve(net.arcs().size());
    for (std::size_t i = 0; i < net.arcs().size(); ++i) {
        const auto& arc = net.arcs()[i];
        long long cap = arc.infinite ? kInf : arc.capacity;
        result.arc_flows.push_back(
            {arc.tail, arc.head, arc.capacity, arc.infinite, cap - dinic.residual(edge_ids[i])});
    }
    return result;
}

ClosureResult max_weight_closure(const ClosureInstance& inst) {
    const int n = inst.node_count;
    if (n < 1) throw InvalidInstanceError("max_weight_closure: need at least one node");
    if (static_cast<int>(inst.weights.size()) != n)
        throw InvalidInstanceError("max_weight_closure: one weight per node required");

    const int source = n;
    const int sink = n + 1;
    FlowNetwork net(n + 2, source, sink);

    long long positive_total = 0;
    for (int v = 0; v < n; ++v) {
        if (inst.weights[v] > 0) {
            net.add_arc(source, v, inst.weights[v]);
            positive_total += inst.weights[v];
        } else if (inst.weights[v] < 0) {
            net.add_arc(v, sink, -inst.weights[v]);
        }
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : inst.arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInstanceError("max_weight_closure: arc endpoint out of range");
        if (u == v) continue;
        if (seen.insert({u, v}).second) net.add_infinite_arc(u, v);
    }

    MaxFlowResult cut = max_flow(net);
    Subset closed(n);
    cut.cut_source_side.for_each([&](int v) {
        if (v < n) closed.add(v);
    });
    return {closed, positive_total - cut.value};
}

}  // namespace denopt
