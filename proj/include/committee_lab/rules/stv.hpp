#pragma once

#include <vector>

#include "committee_lab/profile.hpp"
#include "committee_lab/rng.hpp"

namespace committee_lab {

// floor(n / (k+1)) + 1.
int droop_quota(int num_voters, int k);

struct StvTrace {
    Committee committee;
    std::vector<int> elected_order;   // candidates in seating order
    std::vector<int> removed_voters;  // exactly q removed per seat
};

// Multi-round STV with whole-voter transfers: a candidate reaching the quota
// is seated and a uniformly random q-subset of its current supporters is
// removed; otherwise the weakest candidate is eliminated (ties uniformly at
// random). Fails with quota_exhausted when k * q > n.
StvTrace stv_trace(const PreferenceProfile&, int k, Rng&);
Committee stv(const PreferenceProfile&, int k, Rng&);

}  // namespace committee_lab
