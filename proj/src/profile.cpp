#include "committee_lab/profile.hpp"

#include <algorithm>
#include <numeric>

namespace committee_lab {

PreferenceProfile::PreferenceProfile(int num_candidates,
                                     const std::vector<std::vector<int>>& rankings) {
    if (num_candidates < 1) throw config_error("profile needs at least one candidate");
    if (rankings.empty()) throw config_error("profile needs at least one voter");
    m_ = num_candidates;
    n_ = static_cast<int>(rankings.size());
    ranking_.resize(static_cast<std::size_t>(n_) * m_);
    position_.resize(static_cast<std::size_t>(n_) * m_);

    std::vector<char> seen(m_);
    for (int v = 0; v < n_; ++v) {
        const auto& row = rankings[v];
        if (static_cast<int>(row.size()) != m_)
            throw usage_error("ranking is not a permutation: wrong length");
        std::fill(seen.begin(), seen.end(), 0);
        const std::size_t base = static_cast<std::size_t>(v) * m_;
        for (int i = 0; i < m_; ++i) {
            const int c = row[i];
            if (c < 0 || c >= m_ || seen[c])
                throw usage_error("ranking is not a permutation of the candidates");
            seen[c] = 1;
            ranking_[base + i] = c;
            position_[base + c] = i;
        }
    }
}

void PreferenceProfile::check_voter(int voter) const {
    if (voter < 0 || voter >= n_) throw usage_error("voter index out of range");
}

void PreferenceProfile::check_candidate(int candidate) const {
    if (candidate < 0 || candidate >= m_) throw usage_error("candidate index out of range");
}

PreferenceProfile derive_profile(const Election& e) {
    e.validate();
    const int m = e.num_candidates();
    const int n = e.num_voters();

    PreferenceProfile p;
    p.m_ = m;
    p.n_ = n;
    p.ranking_.resize(static_cast<std::size_t>(n) * m);
    p.position_.resize(static_cast<std::size_t>(n) * m);

#pragma omp parallel for schedule(static)
    for (int v = 0; v < n; ++v) {
        std::vector<double> dist(m);
        for (int c = 0; c < m; ++c) dist[c] = euclidean_distance(e.voters[v], e.candidates[c]);

        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (dist[a] != dist[b]) return dist[a] < dist[b];
            return a < b;
        });

        const std::size_t base = static_cast<std::size_t>(v) * m;
        for (int i = 0; i < m; ++i) {
            p.ranking_[base + i] = order[i];
            p.position_[base + order[i]] = i;
        }
    }
    return p;
}

}  // namespace committee_lab
