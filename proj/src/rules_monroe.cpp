#include "committee_lab/rules/monroe.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "committee_lab/mincostflow.hpp"

namespace committee_lab {

MonroeScore optimal_monroe_assignment(const PreferenceProfile& p, const Committee& committee) {
    const int n = p.num_voters();
    const int m = p.num_candidates();
    const int k = committee.k();
    if (k < 1) throw usage_error("Monroe assignment needs a nonempty committee");
    if (committee.members.back() >= m) throw usage_error("committee member index out of range");
    if (k > n) throw config_error("Monroe needs k <= n");

    const int low_load = n / k;
    const int extra = n % k;

    // Transportation network: source -> voters -> members -> sink. Members
    // take low_load voters at cost 0 toward the sink; when n % k > 0 an
    // overflow node hands out the `extra` additional unit-capacity slots, so
    // maximum flow n forces loads into {low, low+1}.
    const int source = 0;
    const int voter0 = 1;
    const int member0 = 1 + n;
    const int overflow = member0 + k;
    const int sink = overflow + 1;
    MinCostFlow net(sink + 1);

    for (int v = 0; v < n; ++v) net.add_edge(source, voter0 + v, 1, 0);

    // Minimizing total position maximizes total Borda score.
    std::vector<int> voter_member_edge(static_cast<std::size_t>(n) * k);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j)
            voter_member_edge[static_cast<std::size_t>(v) * k + j] =
                net.add_edge(voter0 + v, member0 + j, 1, p.position0(v, committee.members[j]));

    for (int j = 0; j < k; ++j) net.add_edge(member0 + j, sink, low_load, 0);
    if (extra > 0) {
        for (int j = 0; j < k; ++j) net.add_edge(member0 + j, overflow, 1, 0);
        net.add_edge(overflow, sink, extra, 0);
    }

    const auto res = net.run(source, sink);
    assert(res.flow == n);

    MonroeScore out;
    out.score = static_cast<long long>(n) * (m - 1) - res.cost;
    out.assignment.rep.assign(n, -1);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j)
            if (net.flow_on(voter_member_edge[static_cast<std::size_t>(v) * k + j]) == 1)
                out.assignment.rep[v] = committee.members[j];
    return out;
}

GreedyMonroeResult greedy_monroe(const PreferenceProfile& p, int k, Rng& rng) {
    const int n = p.num_voters();
    const int m = p.num_candidates();
    if (k < 1 || k > m) throw config_error("committee size must be in 1..m");
    if (k > n) throw config_error("Monroe needs k <= n");

    std::vector<int> unassigned(n);
    std::iota(unassigned.begin(), unassigned.end(), 0);
    std::vector<char> elected(m, 0);
    std::vector<int> rep(n, -1);
    std::vector<int> members;
    members.reserve(k);

    std::vector<long long> group_score(m);

    for (int round = 0; round < k; ++round) {
        const int remaining = static_cast<int>(unassigned.size());
        const int seats_left = k - round;
        const int group = (remaining + seats_left - 1) / seats_left;  // ceil

        // For each open candidate, the Borda total of its `group` favourite
        // still-unassigned voters. Voter ties resolve (score desc, index asc)
        // so the selected set is unique.
#pragma omp parallel for schedule(dynamic)
        for (int c = 0; c < m; ++c) {
            if (elected[c]) {
                group_score[c] = -1;
                continue;
            }
            std::vector<int> ids = unassigned;
            auto prefers_c = [&](int a, int b) {
                const int pa = p.position0(a, c);
                const int pb = p.position0(b, c);
                if (pa != pb) return pa < pb;
                return a < b;
            };
            std::nth_element(ids.begin(), ids.begin() + (group - 1), ids.end(), prefers_c);
            long long sum = 0;
            for (int i = 0; i < group; ++i) sum += m - 1 - p.position0(ids[i], c);
            group_score[c] = sum;
        }

        long long best = -1;
        std::vector<int> argmax;
        for (int c = 0; c < m; ++c) {
            if (elected[c]) continue;
            if (group_score[c] > best) {
                best = group_score[c];
                argmax.assign(1, c);
            } else if (group_score[c] == best) {
                argmax.push_back(c);
            }
        }
        const int chosen =
            argmax.size() == 1 ? argmax[0] : argmax[rng.below_int(static_cast<int>(argmax.size()))];

        // Re-derive the chosen candidate's group and bind it to the seat.
        std::vector<int> ids = unassigned;
        auto prefers_chosen = [&](int a, int b) {
            const int pa = p.position0(a, chosen);
            const int pb = p.position0(b, chosen);
            if (pa != pb) return pa < pb;
            return a < b;
        };
        std::nth_element(ids.begin(), ids.begin() + (group - 1), ids.end(), prefers_chosen);
        std::vector<char> taken(n, 0);
        for (int i = 0; i < group; ++i) {
            rep[ids[i]] = chosen;
            taken[ids[i]] = 1;
        }
        std::erase_if(unassigned, [&](int v) { return taken[v]; });
        elected[chosen] = 1;
        members.push_back(chosen);
    }

    GreedyMonroeResult out;
    out.committee = Committee::of(std::move(members), m);
    out.assignment.rep = std::move(rep);
    return out;
}

namespace {

bool next_combination(std::vector<int>& comb, int m) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < m - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Committee monroe_exact(const PreferenceProfile& p, int k, const MonroeExactBudget& budget) {
    const int n = p.num_voters();
    const int m = p.num_candidates();
    if (k < 1 || k > m) throw config_error("committee size must be in 1..m");
    if (k > n) throw config_error("Monroe needs k <= n");
    if (n > budget.max_voters)
        throw budget_exceeded("instance too large for exact Monroe solver: n > " +
                              std::to_string(budget.max_voters));

    // C(m,k) with early exit against the budget.
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total = total * static_cast<std::uint64_t>(m - i) / (i + 1);
        if (total > budget.max_committees)
            throw budget_exceeded("instance too large for exact Monroe solver: C(m,k) exceeds budget of " +
                                  std::to_string(budget.max_committees) + " committees");
    }

    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    long long best_score = -1;
    std::vector<int> best_members;
    do {
        const auto scored = optimal_monroe_assignment(p, Committee{comb});
        if (scored.score > best_score) {  // lexicographic: first max wins
            best_score = scored.score;
            best_members = comb;
        }
    } while (next_combination(comb, m));

    return Committee::of(std::move(best_members), m);
}

}  // namespace committee_lab
