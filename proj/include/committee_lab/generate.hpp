#pragma once

#include <span>
#include <vector>

#include "committee_lab/election.hpp"
#include "committee_lab/rng.hpp"

namespace committee_lab {

struct GaussianComponent {
    Point2D mean;
    double sigma = 0.0;  // per-axis standard deviation
    int count = 0;
};

// Where a population of points is drawn from: an axis-aligned uniform
// rectangle, or an isotropic Gaussian mixture with per-component counts.
struct PopulationSpec {
    enum class Kind { uniform_rect, gaussian_mixture };

    Kind kind = Kind::uniform_rect;
    Point2D center{};
    double width = 0.0;
    double height = 0.0;
    std::vector<GaussianComponent> components;

    static PopulationSpec uniform_rect(Point2D center, double width, double height);
    static PopulationSpec gaussian_mixture(std::vector<GaussianComponent> components);

    int mixture_count() const;  // sum of component counts
    void validate() const;      // throws config_error
};

// uniform_rect: `count` i.i.d. points over the rectangle.
// gaussian_mixture: per-component counts govern and `count` is ignored;
// points come out component by component.
std::vector<Point2D> generate_points(const PopulationSpec&, int count, Rng&);

// Candidates and voters drawn independently from the same rectangle,
// candidates first. No party structure.
Election uniform_election(int num_candidates, int num_voters, const PopulationSpec& rect, Rng&);

// The polarized-society designs: three voter Gaussians with means (-2,0),
// (0,0), (2,0) and sigma 0.25, party centers set to those means.
//   uniform_candidates: 250 voters (100/50/100), 600 candidates uniform on
//     the 6x3 rectangle x in [-3,3], y in [-1.5,1.5].
//   citizen_candidates: 500 voters (200/100/200), 250 candidates from the
//     voter mixture (100/50/100).
enum class PolarizedVariant { uniform_candidates, citizen_candidates };

Election polarized_election(PolarizedVariant, Rng&);

// Index of the nearest center; exact ties go to the lower index.
int assign_party(Point2D p, std::span<const Point2D> centers);

}  // namespace committee_lab
