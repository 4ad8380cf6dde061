#include "rydswap/constants.hpp"

namespace rydswap {

double interaction_strength(double r_um, const PhysicalConstants& constants) {
    if (r_um <= 0.0) throw std::domain_error("interaction_strength: distance must be positive");
    double r2 = r_um * r_um;
    double r6 = r2 * r2 * r2;
    return kTwoPi * constants.c6 / r6;
}

}  // namespace rydswap
