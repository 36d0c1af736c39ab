#pragma once

#include <vector>

#include "committee_lab/rng.hpp"
#include "committee_lab/scores.hpp"

namespace committee_lab {

// Balanced partition of the electorate: district sizes differ by at most 1.
struct Districting {
    std::vector<int> district_of;  // per voter, 0..k-1
    int num_districts = 0;

    std::vector<int> sizes() const;
};

// Uniform random balanced partition: shuffle voters, cut into k contiguous
// blocks, the first n mod k blocks take the extra voter.
Districting random_partition(int num_voters, int k, Rng&);

enum class DistrictScoreKind { plurality, borda };

// One seat per district, decided in district index order; a candidate who
// already holds a seat is ineligible in later districts, so the committee
// always has k distinct members. Score ties break uniformly at random.
Committee district_elect(const PreferenceProfile&, const Districting&, DistrictScoreKind, Rng&);

// Random districting + per-district plurality / Borda.
Committee fpp(const PreferenceProfile&, int k, Rng&);
Committee district_borda(const PreferenceProfile&, int k, Rng&);

}  // namespace committee_lab
