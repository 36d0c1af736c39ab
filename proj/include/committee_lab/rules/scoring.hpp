#pragma once

#include <span>

#include "committee_lab/rng.hpp"
#include "committee_lab/scores.hpp"

namespace committee_lab {

struct ScoredCandidate {
    int candidate = 0;
    long long score = 0;
};

// Seat the k best-scoring candidates. Everyone strictly above the k-th
// highest score is seated outright; remaining seats are filled by a uniform
// random draw among the candidates tied at that threshold. With no tie at
// the threshold the result is seed-independent.
Committee top_k_by_score(std::span<const ScoredCandidate>, int k, Rng&);
Committee top_k_by_score(std::span<const long long> totals, int k, Rng&);

Committee sntv(const PreferenceProfile&, int k, Rng&);     // plurality totals
Committee bloc(const PreferenceProfile&, int k, Rng&);     // k-approval totals
Committee k_borda(const PreferenceProfile&, int k, Rng&);  // Borda totals

}  // namespace committee_lab
