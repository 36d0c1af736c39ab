#include "committee_lab/rules/chamberlin_courant.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace committee_lab {

long long cc_score(const PreferenceProfile& p, const Committee& committee) {
    if (committee.k() < 1) throw usage_error("cc_score needs a nonempty committee");
    if (committee.members.back() >= p.num_candidates())
        throw usage_error("committee member index out of range");
    const int m = p.num_candidates();
    const int n = p.num_voters();
    const auto& members = committee.members;

    long long total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (int v = 0; v < n; ++v) {
        int best = m;
        for (int c : members) best = std::min(best, p.position0(v, c));
        total += m - 1 - best;
    }
    return total;
}

namespace {

constexpr std::uint64_t kBinomSat = std::numeric_limits<std::uint64_t>::max() / 4;

// Pascal triangle up to (m, k), saturated so huge counts stay comparable.
std::vector<std::vector<std::uint64_t>> binom_table(int m, int k) {
    std::vector<std::vector<std::uint64_t>> table(m + 1, std::vector<std::uint64_t>(k + 1, 0));
    for (int i = 0; i <= m; ++i) {
        table[i][0] = 1;
        for (int j = 1; j <= std::min(i, k); ++j) {
            const std::uint64_t a = table[i - 1][j - 1];
            const std::uint64_t b = table[i - 1][j];
            table[i][j] = (a >= kBinomSat - b) ? kBinomSat : a + b;
        }
    }
    return table;
}

// r-th k-combination of {0..m-1} in lexicographic order.
std::vector<int> unrank_combination(std::uint64_t r, int m, int k,
                                    const std::vector<std::vector<std::uint64_t>>& binom) {
    std::vector<int> comb(k);
    int c = 0;
    for (int i = 0; i < k; ++i) {
        while (binom[m - 1 - c][k - 1 - i] <= r) {
            r -= binom[m - 1 - c][k - 1 - i];
            ++c;
        }
        comb[i] = c++;
    }
    return comb;
}

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

long long score_members(const PreferenceProfile& p, const std::vector<int>& members) {
    const int m = p.num_candidates();
    const int n = p.num_voters();
    long long total = 0;
    for (int v = 0; v < n; ++v) {
        int best = m;
        for (int c : members) best = std::min(best, p.position0(v, c));
        total += m - 1 - best;
    }
    return total;
}

struct BestCommittee {
    long long score = -1;
    std::vector<int> members;
};

}  // namespace

Committee cc_exact(const PreferenceProfile& p, int k, const ExactBudget& budget) {
    const int m = p.num_candidates();
    if (k < 1 || k > m) throw config_error("committee size must be in 1..m");

    const auto binom = binom_table(m, k);
    const std::uint64_t total = binom[m][k];
    if (total > budget.max_committees)
        throw budget_exceeded("instance too large for exact solver: C(m,k) exceeds budget of " +
                              std::to_string(budget.max_committees) + " committees");

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    const int num_chunks =
        static_cast<int>(std::min<std::uint64_t>(total, static_cast<std::uint64_t>(max_threads) * 8));
    const std::uint64_t chunk = (total + num_chunks - 1) / num_chunks;

    std::vector<BestCommittee> best(num_chunks);
#pragma omp parallel for schedule(dynamic)
    for (int ci = 0; ci < num_chunks; ++ci) {
        const std::uint64_t lo = static_cast<std::uint64_t>(ci) * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) continue;
        std::vector<int> comb = unrank_combination(lo, m, k, binom);
        BestCommittee b;
        for (std::uint64_t r = lo; r < hi; ++r) {
            const long long s = score_members(p, comb);
            if (s > b.score) {
                b.score = s;
                b.members = comb;
            }
            if (r + 1 < hi) next_combination(comb, m);
        }
        best[ci] = std::move(b);
    }

    // Chunks are in rank order, so a strictly-greater merge keeps the
    // lexicographically smallest co-optimal committee.
    BestCommittee winner;
    for (auto& b : best)
        if (b.score > winner.score) winner = std::move(b);
    return Committee::of(std::move(winner.members), m);
}

Committee cc_greedy(const PreferenceProfile& p, int k) {
    const int m = p.num_candidates();
    const int n = p.num_voters();
    if (k < 1 || k > m) throw config_error("committee size must be in 1..m");

    std::vector<int> satisfaction(n, 0);  // best Borda score seen so far
    std::vector<char> in_committee(m, 0);
    std::vector<long long> gain(m);
    std::vector<int> members;
    members.reserve(k);

    for (int round = 0; round < k; ++round) {
#pragma omp parallel for schedule(static)
        for (int c = 0; c < m; ++c) {
            if (in_committee[c]) {
                gain[c] = -1;
                continue;
            }
            long long g = 0;
            for (int v = 0; v < n; ++v) {
                const int b = m - 1 - p.position0(v, c);
                if (b > satisfaction[v]) g += b - satisfaction[v];
            }
            gain[c] = g;
        }

        int pick = -1;
        long long best_gain = -1;
        for (int c = 0; c < m; ++c) {
            if (gain[c] > best_gain) {  // ties stay with the lower index
                best_gain = gain[c];
                pick = c;
            }
        }

        in_committee[pick] = 1;
        members.push_back(pick);
        for (int v = 0; v < n; ++v) {
            const int b = m - 1 - p.position0(v, pick);
            if (b > satisfaction[v]) satisfaction[v] = b;
        }
    }
    return Committee::of(std::move(members), m);
}

}  // namespace committee_lab
