#include "committee_lab/generate.hpp"

#include <utility>

namespace committee_lab {

PopulationSpec PopulationSpec::uniform_rect(Point2D center, double width, double height) {
    PopulationSpec spec;
    spec.kind = Kind::uniform_rect;
    spec.center = center;
    spec.width = width;
    spec.height = height;
    return spec;
}

PopulationSpec PopulationSpec::gaussian_mixture(std::vector<GaussianComponent> components) {
    PopulationSpec spec;
    spec.kind = Kind::gaussian_mixture;
    spec.components = std::move(components);
    return spec;
}

int PopulationSpec::mixture_count() const {
    int total = 0;
    for (const auto& comp : components) total += comp.count;
    return total;
}

void PopulationSpec::validate() const {
    if (kind == Kind::uniform_rect) {
        if (!is_finite(center)) throw config_error("rectangle center is not finite");
        if (!(width > 0.0) || !(height > 0.0))
            throw config_error("rectangle width and height must be positive");
    } else {
        if (components.empty()) throw config_error("gaussian mixture needs at least one component");
        for (const auto& comp : components) {
            if (!is_finite(comp.mean)) throw config_error("component mean is not finite");
            if (!(comp.sigma > 0.0)) throw config_error("component sigma must be positive");
            if (comp.count < 1) throw config_error("component count must be >= 1");
        }
    }
}

std::vector<Point2D> generate_points(const PopulationSpec& spec, int count, Rng& rng) {
    spec.validate();
    std::vector<Point2D> pts;
    if (spec.kind == PopulationSpec::Kind::uniform_rect) {
        if (count < 1) throw config_error("point count must be >= 1");
        pts.reserve(count);
        const double x0 = spec.center.x - spec.width / 2.0;
        const double x1 = spec.center.x + spec.width / 2.0;
        const double y0 = spec.center.y - spec.height / 2.0;
        const double y1 = spec.center.y + spec.height / 2.0;
        for (int i = 0; i < count; ++i) {
            const double x = rng.uniform(x0, x1);
            const double y = rng.uniform(y0, y1);
            pts.push_back({x, y});
        }
    } else {
        // count is ignored; per-component counts govern, component by component
        pts.reserve(spec.mixture_count());
        for (const auto& comp : spec.components) {
            for (int i = 0; i < comp.count; ++i) {
                const double x = rng.normal(comp.mean.x, comp.sigma);
                const double y = rng.normal(comp.mean.y, comp.sigma);
                pts.push_back({x, y});
            }
        }
    }
    return pts;
}

Election uniform_election(int num_candidates, int num_voters, const PopulationSpec& rect, Rng& rng) {
    if (num_candidates < 1 || num_voters < 1)
        throw config_error("election needs at least one candidate and one voter");
    Election e;
    e.candidates = generate_points(rect, num_candidates, rng);
    e.voters = generate_points(rect, num_voters, rng);
    return e;
}

namespace {

const std::vector<Point2D> kPolarizedCenters = {{-2.0, 0.0}, {0.0, 0.0}, {2.0, 0.0}};

PopulationSpec polarized_mixture(int large, int small) {
    return PopulationSpec::gaussian_mixture({
        {kPolarizedCenters[0], 0.25, large},
        {kPolarizedCenters[1], 0.25, small},
        {kPolarizedCenters[2], 0.25, large},
    });
}

}  // namespace

Election polarized_election(PolarizedVariant variant, Rng& rng) {
    Election e;
    if (variant == PolarizedVariant::uniform_candidates) {
        e.candidates = generate_points(PopulationSpec::uniform_rect({0.0, 0.0}, 6.0, 3.0), 600, rng);
        e.voters = generate_points(polarized_mixture(100, 50), 0, rng);
    } else {
        e.candidates = generate_points(polarized_mixture(100, 50), 0, rng);
        e.voters = generate_points(polarized_mixture(200, 100), 0, rng);
    }
    e.party_centers = kPolarizedCenters;
    return e;
}

int assign_party(Point2D p, std::span<const Point2D> centers) {
    if (centers.empty()) throw usage_error("assign_party needs at least one center");
    int best = 0;
    double best_dist = euclidean_distance(p, centers[0]);
    for (int i = 1; i < static_cast<int>(centers.size()); ++i) {
        const double d = euclidean_distance(p, centers[i]);
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    return best;
}

}  // namespace committee_lab
