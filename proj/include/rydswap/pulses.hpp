#pragma once

#include <variant>

namespace rydswap {

struct GateParameters;

// Pulse families. Amplitudes are angular Rabi frequencies (rad/us), times us.
// Negative composite coefficients are allowed; the overall sign of a Rabi
// frequency is a phase convention.

// Isosceles triangle: zero at t = 0 and t = t_gate, peak omega_max at t_gate/2.
struct TrianglePulse {
    double omega_max = 0.0;
};

// Gaussian corrected for exact zeros at both ends of the gate window.
struct GaussianPulse {
    double omega_max = 0.0;
    double width = 0.1;  // us
};

// c0 + c1*cos(2*pi*t/t_gate) + c2*sin(pi*t/t_gate)
struct CompositePulse {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

using PulseShape = std::variant<TrianglePulse, GaussianPulse, CompositePulse>;

// Evaluate the pulse at time t in [0, t_gate]; throws std::domain_error outside.
double rabi(const PulseShape& shape, double t, double t_gate);

// Largest |Omega(t)| over a uniform grid (exact for triangle and gaussian).
double max_abs_rabi(const PulseShape& shape, double t_gate, int grid_points = 2001);

// Scalar quantities of the reduced swapping model.
struct EffectiveQuantities {
    double omega_e = 0.0;  // |01>,|10> <-> |rr> coupling
    double omega_c = 0.0;  // ac Stark shift of |01>, |10>
    double delta = 0.0;    // effective detuning of |rr>, includes q
};

EffectiveQuantities effective_quantities(double omega1, double omega2, double delta1,
                                         double delta2, double q);

// Integral of 2*Omega_e(t)^2/delta(t) over the gate, composite Simpson on a
// uniform grid. delta(t) passing close to zero is reported, not fatal.
struct PulseAreaResult {
    double area = 0.0;
    bool delta_near_zero = false;  // |delta(t)| < 1e-3 rad/us somewhere on the grid
    double min_abs_delta = 0.0;
};

PulseAreaResult effective_pulse_area(const GateParameters& params, int grid_points = 4001);

}  // namespace rydswap
