#include "committee_lab/scores.hpp"

namespace committee_lab {

namespace {

void check_t(int t, int m) {
    if (t < 1 || t > m) throw usage_error("approval threshold t must be in 1..m");
}

// Per-vote score from a 0-based position.
inline long long vote_score(int pos0, ScoreKind kind, int m) {
    switch (kind.type) {
        case ScoreKind::Type::plurality: return pos0 == 0 ? 1 : 0;
        case ScoreKind::Type::t_approval: return pos0 < kind.t ? 1 : 0;
        case ScoreKind::Type::borda: return m - 1 - pos0;
    }
    return 0;
}

}  // namespace

int borda_score(const PreferenceProfile& p, int voter, int candidate) {
    return p.num_candidates() - p.position(voter, candidate);
}

int t_approval_score(const PreferenceProfile& p, int voter, int candidate, int t) {
    check_t(t, p.num_candidates());
    return p.position(voter, candidate) <= t ? 1 : 0;
}

long long total_score(const PreferenceProfile& p, int candidate, ScoreKind kind) {
    if (candidate < 0 || candidate >= p.num_candidates())
        throw usage_error("candidate index out of range");
    if (kind.type == ScoreKind::Type::t_approval) check_t(kind.t, p.num_candidates());
    const int m = p.num_candidates();
    const int n = p.num_voters();
    long long sum = 0;
    for (int v = 0; v < n; ++v) sum += vote_score(p.position0(v, candidate), kind, m);
    return sum;
}

std::vector<long long> total_scores(const PreferenceProfile& p, ScoreKind kind) {
    if (kind.type == ScoreKind::Type::t_approval) check_t(kind.t, p.num_candidates());
    const int m = p.num_candidates();
    const int n = p.num_voters();
    std::vector<long long> totals(m);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < m; ++c) {
        long long sum = 0;
        for (int v = 0; v < n; ++v) sum += vote_score(p.position0(v, c), kind, m);
        totals[c] = sum;
    }
    return totals;
}

}  // namespace committee_lab
