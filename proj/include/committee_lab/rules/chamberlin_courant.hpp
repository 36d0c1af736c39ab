#pragma once

#include <cstdint>

#include "committee_lab/scores.hpp"

namespace committee_lab {

// Sum over voters of the Borda score of their favourite committee member.
long long cc_score(const PreferenceProfile&, const Committee&);

struct ExactBudget {
    std::uint64_t max_committees = 2'000'000;
};

// Exhaustive maximizer of cc_score; among co-optimal committees returns the
// lexicographically smallest member set. Refuses (budget_exceeded) when
// C(m,k) is over the budget -- never falls back silently.
Committee cc_exact(const PreferenceProfile&, int k, const ExactBudget& = {});

// Greedy maximizer: k rounds of best marginal gain, ties to the lowest
// candidate index.
Committee cc_greedy(const PreferenceProfile&, int k);

}  // namespace committee_lab
