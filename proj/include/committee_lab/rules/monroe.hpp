#pragma once

#include <cstdint>

#include "committee_lab/rng.hpp"
#include "committee_lab/scores.hpp"

namespace committee_lab {

// Voter -> committee-member mapping with every member's load between
// floor(n/k) and ceil(n/k).
struct MonroeAssignment {
    std::vector<int> rep;  // per voter, the assigned member
};

struct MonroeScore {
    MonroeAssignment assignment;
    long long score = 0;
};

// Best balanced assignment for a FIXED committee, solved as a transportation
// problem over min-cost flow. Requires k <= n.
MonroeScore optimal_monroe_assignment(const PreferenceProfile&, const Committee&);

struct GreedyMonroeResult {
    Committee committee;
    MonroeAssignment assignment;
};

// Round-by-round approximation: each seat goes to the candidate whose best
// group of still-unassigned voters has the highest Borda total (candidate
// ties broken uniformly at random), and that group is bound to the seat.
// Group sizes are ceil(remaining voters / remaining seats), which yields
// loads of ceil(n/k) for the first n mod k seats and floor(n/k) after.
GreedyMonroeResult greedy_monroe(const PreferenceProfile&, int k, Rng&);

struct MonroeExactBudget {
    std::uint64_t max_committees = 100'000;
    int max_voters = 16;
};

// Exhaustive committees, each scored with optimal_monroe_assignment;
// lexicographic tie-break. Refuses over-budget instances.
Committee monroe_exact(const PreferenceProfile&, int k, const MonroeExactBudget& = {});

}  // namespace committee_lab
