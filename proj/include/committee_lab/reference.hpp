#pragma once

// Serial reference implementations of the parallel kernels. Plain loops, no
// pragmas; kept for the correctness tests and the serial-vs-OpenMP benchmark.

#include "committee_lab/metrics.hpp"
#include "committee_lab/rules/chamberlin_courant.hpp"

namespace committee_lab::reference {

PreferenceProfile derive_profile(const Election&);
std::vector<long long> total_scores(const PreferenceProfile&, ScoreKind);
long long cc_score(const PreferenceProfile&, const Committee&);
Committee cc_exact(const PreferenceProfile&, int k, const ExactBudget& = {});
Committee cc_greedy(const PreferenceProfile&, int k);
double avg_misrepresentation(const Election&, const Committee&);

}  // namespace committee_lab::reference
