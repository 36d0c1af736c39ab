#pragma once

#include <vector>

#include "committee_lab/profile.hpp"

namespace committee_lab {

// Which per-vote score a rule sums over the electorate.
struct ScoreKind {
    enum class Type { plurality, t_approval, borda };

    Type type = Type::borda;
    int t = 1;  // only meaningful for t_approval

    static ScoreKind plurality() { return {Type::plurality, 1}; }
    static ScoreKind t_approval(int t) { return {Type::t_approval, t}; }
    static ScoreKind borda() { return {Type::borda, 1}; }
};

// m - pos_v(c), in [0, m-1].
int borda_score(const PreferenceProfile&, int voter, int candidate);

// 1 iff the voter ranks the candidate among the top t positions; 1 <= t <= m.
int t_approval_score(const PreferenceProfile&, int voter, int candidate, int t);

// Sum of the per-vote score over all voters.
long long total_score(const PreferenceProfile&, int candidate, ScoreKind);

// Totals for every candidate at once; parallel over candidates.
std::vector<long long> total_scores(const PreferenceProfile&, ScoreKind);

}  // namespace committee_lab
