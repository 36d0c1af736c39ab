#pragma once

#include <span>
#include <vector>

#include "committee_lab/election.hpp"

namespace committee_lab {

// Complete per-voter rankings with an O(1) position lookup table.
// Positions are 1-based: a voter's top choice has position 1, so the Borda
// score of candidate c in vote v is m - position(v, c).
class PreferenceProfile {
public:
    // rankings[v] must be a permutation of {0..m-1}, best to worst.
    PreferenceProfile(int num_candidates, const std::vector<std::vector<int>>& rankings);

    int num_candidates() const { return m_; }
    int num_voters() const { return n_; }

    std::span<const int> ranking(int voter) const {
        check_voter(voter);
        return {ranking_.data() + static_cast<std::size_t>(voter) * m_, static_cast<std::size_t>(m_)};
    }

    // 1-based position of candidate in the voter's ranking.
    int position(int voter, int candidate) const {
        check_voter(voter);
        check_candidate(candidate);
        return position0(voter, candidate) + 1;
    }

    // 0-based position; unchecked hot path for the rule kernels.
    int position0(int voter, int candidate) const {
        return position_[static_cast<std::size_t>(voter) * m_ + candidate];
    }

    int top_choice(int voter) const { return ranking_[static_cast<std::size_t>(voter) * m_]; }

private:
    PreferenceProfile() = default;
    void check_voter(int voter) const;
    void check_candidate(int candidate) const;

    friend PreferenceProfile derive_profile(const Election&);

    int m_ = 0;
    int n_ = 0;
    std::vector<int> ranking_;   // n rows of m candidate indices
    std::vector<int> position_;  // n rows of m 0-based positions
};

// Rank candidates by ascending Euclidean distance to each voter; exact
// distance ties go to the lower candidate index. Parallel over voters.
PreferenceProfile derive_profile(const Election&);

}  // namespace committee_lab
