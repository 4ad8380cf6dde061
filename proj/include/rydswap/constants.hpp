#pragma once

#include <cmath>
#include <stdexcept>

namespace rydswap {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Boundary convention: configs and tables quote frequencies as value/(2*pi)
// in MHz; everything internal is angular (rad/us).
inline constexpr double mhz_to_rad_us(double f_mhz) { return kTwoPi * f_mhz; }
inline constexpr double rad_us_to_mhz(double w) { return w / kTwoPi; }

// Fixed atomic and apparatus constants for the rubidium-87 setup.
struct PhysicalConstants {
    double c6 = 862690.0;      // vdW dispersion coefficient, C6/2pi in MHz*um^6
    double tau_r = 400.0;      // Rydberg-state lifetime, us
    double mass = 87.0 * 1.66053906660e-27;  // atomic mass, kg
    double kB = 1.380649e-23;  // Boltzmann constant, J/K
    double k1_eff = 8.76e6;    // effective wavevector of the |0>-|r> drive, 1/m
    double k2_eff = 5.0e6;     // effective wavevector of the |1>-|r> drive, 1/m

    void validate() const {
        if (c6 <= 0 || tau_r <= 0 || mass <= 0 || kB <= 0 || k1_eff <= 0 || k2_eff <= 0)
            throw std::invalid_argument("PhysicalConstants: all entries must be positive");
    }

    // 1D rms thermal velocity sqrt(kB T / m) in m/s (equivalently um/us).
    double v_rms(double temperature_k) const {
        return std::sqrt(kB * temperature_k / mass);
    }
};

// Decay branching of |r> into {|0>, |1>, |alpha>}.
struct BranchingRatios {
    double eta_r0 = 0.5;
    double eta_r1 = 0.5;
    double eta_alpha = 0.0;

    void validate() const {
        auto in01 = [](double x) { return x >= 0.0 && x <= 1.0; };
        if (!in01(eta_r0) || !in01(eta_r1) || !in01(eta_alpha))
            throw std::invalid_argument("BranchingRatios: each ratio must lie in [0,1]");
        if (std::abs(eta_r0 + eta_r1 + eta_alpha - 1.0) > 1e-12)
            throw std::invalid_argument("BranchingRatios: ratios must sum to 1");
    }
};

// V(r) = 2*pi*C6/r^6 in rad/us for a distance in um.
double interaction_strength(double r_um, const PhysicalConstants& constants = {});

}  // namespace rydswap
