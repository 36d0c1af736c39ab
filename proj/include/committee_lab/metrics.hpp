#pragma once

#include <optional>
#include <vector>

#include "committee_lab/election.hpp"

namespace committee_lab {

// Distance from the voter to the nearest committee member's platform.
double voter_misrepresentation(const Election&, const Committee&, int voter);

// Mean of voter_misrepresentation over the electorate. Computed from raw
// positions, never from the ordinal profile.
double avg_misrepresentation(const Election&, const Committee&);

// Committee members counted by nearest party center; sums to k.
std::vector<int> party_counts(const Election&, const Committee&);

// Share of members belonging to the middle party; requires exactly three
// party centers with the centrist one at index 1.
double centrist_fraction(const Election&, const Committee&);

struct EvaluationRecord {
    double misrepresentation = 0.0;
    std::vector<int> party_counts;                 // empty when no parties
    std::optional<double> centrist_fraction;       // set for 3-party elections
};

EvaluationRecord evaluate_committee(const Election&, const Committee&);

}  // namespace committee_lab
