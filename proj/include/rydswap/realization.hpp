#pragma once

#include "rydswap/parameters.hpp"

namespace rydswap {

// One concrete draw of all stochastic perturbations applied to a single
// trajectory. The ideal() realization reproduces the noise-free gate.
struct NoiseRealization {
    double v_realized = 0.0;      // interaction actually felt, rad/us
    double alpha1 = 0.0;          // Doppler offset on the |0>-|r> drive, rad/us
    double alpha2 = 0.0;          // Doppler offset on the |1>-|r> drive, rad/us
    double intensity_scale = 1.0; // common multiplicative amplitude factor
    double omega_offset1 = 0.0;   // additive-intensity alternative, rad/us
    double omega_offset2 = 0.0;   // (constant offset added to each pulse)
    double gamma0_realized = 0.0; // laser-phase dephasing rate, rad/us
    double spatial_scale1 = 1.0;  // beam-profile factor at atom 1, in (0,1]
    double spatial_scale2 = 1.0;  // beam-profile factor at atom 2, in (0,1]

    static NoiseRealization ideal(const GateParameters& params) {
        NoiseRealization r;
        r.v_realized = params.v0;
        return r;
    }

    bool has_doppler() const { return alpha1 != 0.0 || alpha2 != 0.0; }

    // Combined amplitude factor seen by each atom's drives.
    double drive_scale1() const { return intensity_scale * spatial_scale1; }
    double drive_scale2() const { return intensity_scale * spatial_scale2; }
};

}  // namespace rydswap
