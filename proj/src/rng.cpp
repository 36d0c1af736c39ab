#include "committee_lab/rng.hpp"

#include <cmath>
#include <numbers>

namespace committee_lab {

double Rng::normal(double mean, double sigma) {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log() finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace committee_lab
