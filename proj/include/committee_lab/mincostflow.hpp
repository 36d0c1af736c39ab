#pragma once

#include <vector>

namespace committee_lab {

// Successive-shortest-path min-cost max-flow. Sized for the balanced
// assignment instances this project solves (tens of nodes), not a general
// network library.
class MinCostFlow {
public:
    explicit MinCostFlow(int num_nodes);

    // Adds from->to with the given capacity and per-unit cost plus the
    // implicit reverse edge; returns the edge id for flow_on().
    int add_edge(int from, int to, long long capacity, long long cost);

    struct Result {
        long long flow = 0;
        long long cost = 0;
    };

    Result run(int source, int sink);

    // Units pushed through an edge returned by add_edge.
    long long flow_on(int edge_id) const;

private:
    struct Edge {
        int to;
        long long cap;
        long long cost;
    };

    int n_;
    std::vector<Edge> edges_;             // paired: id^1 is the reverse edge
    std::vector<std::vector<int>> adj_;
};

}  // namespace committee_lab
