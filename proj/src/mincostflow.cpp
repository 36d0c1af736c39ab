#include "committee_lab/mincostflow.hpp"

#include <cassert>
#include <deque>
#include <limits>

namespace committee_lab {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

MinCostFlow::MinCostFlow(int num_nodes) : n_(num_nodes), adj_(num_nodes) {}

int MinCostFlow::add_edge(int from, int to, long long capacity, long long cost) {
    assert(from >= 0 && from < n_ && to >= 0 && to < n_);
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({to, capacity, cost});
    adj_[from].push_back(id);
    edges_.push_back({from, 0, -cost});
    adj_[to].push_back(id + 1);
    return id;
}

MinCostFlow::Result MinCostFlow::run(int source, int sink) {
    Result result;
    std::vector<long long> dist(n_);
    std::vector<int> parent_edge(n_);
    std::vector<char> in_queue(n_);

    for (;;) {
        // SPFA: shortest path by cost in the residual graph.
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        std::fill(in_queue.begin(), in_queue.end(), 0);
        dist[source] = 0;
        std::deque<int> queue{source};
        in_queue[source] = 1;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            in_queue[u] = 0;
            for (int id : adj_[u]) {
                const Edge& e = edges_[id];
                if (e.cap <= 0 || dist[u] + e.cost >= dist[e.to]) continue;
                dist[e.to] = dist[u] + e.cost;
                parent_edge[e.to] = id;
                if (!in_queue[e.to]) {
                    queue.push_back(e.to);
                    in_queue[e.to] = 1;
                }
            }
        }
        if (dist[sink] >= kInf) break;

        long long bottleneck = kInf;
        for (int v = sink; v != source; v = edges_[parent_edge[v] ^ 1].to)
            bottleneck = std::min(bottleneck, edges_[parent_edge[v]].cap);
        for (int v = sink; v != source; v = edges_[parent_edge[v] ^ 1].to) {
            edges_[parent_edge[v]].cap -= bottleneck;
            edges_[parent_edge[v] ^ 1].cap += bottleneck;
        }
        result.flow += bottleneck;
        result.cost += bottleneck * dist[sink];
    }
    return result;
}

long long MinCostFlow::flow_on(int edge_id) const {
    // Pushed flow accumulates as reverse-edge capacity.
    return edges_[edge_id ^ 1].cap;
}

}  // namespace committee_lab
