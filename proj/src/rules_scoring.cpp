#include "committee_lab/rules/scoring.hpp"

#include <algorithm>

namespace committee_lab {

Committee top_k_by_score(std::span<const ScoredCandidate> scored, int k, Rng& rng) {
    const int m = static_cast<int>(scored.size());
    if (k < 1 || k > m) throw config_error("committee size must be in 1..m");

    std::vector<long long> values;
    values.reserve(m);
    for (const auto& sc : scored) values.push_back(sc.score);
    std::nth_element(values.begin(), values.begin() + (k - 1), values.end(),
                     std::greater<long long>());
    const long long threshold = values[k - 1];

    std::vector<int> members;
    members.reserve(k);
    std::vector<int> tied;
    for (const auto& sc : scored) {
        if (sc.score > threshold)
            members.push_back(sc.candidate);
        else if (sc.score == threshold)
            tied.push_back(sc.candidate);
    }

    const int need = k - static_cast<int>(members.size());
    if (need == static_cast<int>(tied.size())) {
        // no tie to resolve; seed-independent result
        members.insert(members.end(), tied.begin(), tied.end());
    } else {
        for (int i = 0; i < need; ++i) {
            const int j = i + rng.below_int(static_cast<int>(tied.size()) - i);
            std::swap(tied[i], tied[j]);
            members.push_back(tied[i]);
        }
    }

    int max_candidate = 0;
    for (const auto& sc : scored) max_candidate = std::max(max_candidate, sc.candidate);
    return Committee::of(std::move(members), max_candidate + 1);
}

Committee top_k_by_score(std::span<const long long> totals, int k, Rng& rng) {
    std::vector<ScoredCandidate> scored(totals.size());
    for (int c = 0; c < static_cast<int>(totals.size()); ++c) scored[c] = {c, totals[c]};
    return top_k_by_score(std::span<const ScoredCandidate>(scored), k, rng);
}

Committee sntv(const PreferenceProfile& p, int k, Rng& rng) {
    const auto totals = total_scores(p, ScoreKind::plurality());
    return top_k_by_score(std::span<const long long>(totals), k, rng);
}

Committee bloc(const PreferenceProfile& p, int k, Rng& rng) {
    if (k < 1 || k > p.num_candidates()) throw config_error("committee size must be in 1..m");
    const auto totals = total_scores(p, ScoreKind::t_approval(k));
    return top_k_by_score(std::span<const long long>(totals), k, rng);
}

Committee k_borda(const PreferenceProfile& p, int k, Rng& rng) {
    const auto totals = total_scores(p, ScoreKind::borda());
    return top_k_by_score(std::span<const long long>(totals), k, rng);
}

}  // namespace committee_lab
