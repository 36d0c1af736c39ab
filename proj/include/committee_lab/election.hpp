#pragma once

#include <cmath>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "committee_lab/errors.hpp"

namespace committee_lab {

// A position on the two-dimensional political spectrum.
struct Point2D {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline bool is_finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Plain Euclidean distance. Profile derivation and the misrepresentation
// metric must agree on exact ties, so both go through this one expression.
inline double euclidean_distance(Point2D p, Point2D q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return std::sqrt(dx * dx + dy * dy);
}

// Candidate and voter positions. Indices are stable identifiers: candidate i
// and voter j keep their meaning through every derived structure.
struct Election {
    std::vector<Point2D> candidates;
    std::vector<Point2D> voters;
    std::vector<Point2D> party_centers;  // empty = no party structure

    int num_candidates() const { return static_cast<int>(candidates.size()); }
    int num_voters() const { return static_cast<int>(voters.size()); }

    void validate() const;  // throws config_error
};

// A size-k subset of the candidates, kept sorted ascending.
struct Committee {
    std::vector<int> members;

    int k() const { return static_cast<int>(members.size()); }
    bool contains(int candidate) const;

    // Sorts, checks ranges and duplicates.
    static Committee of(std::vector<int> members, int num_candidates);

    friend bool operator==(const Committee&, const Committee&) = default;
    friend auto operator<=>(const Committee&, const Committee&) = default;
};

// JSON document with candidates / voters / optional party_centers as [x,y]
// pairs. Finite doubles round-trip exactly.
std::string serialize_election(const Election&);
Election parse_election(const std::string& text);

}  // namespace committee_lab
