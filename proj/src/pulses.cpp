#include "rydswap/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rydswap/constants.hpp"
#include "rydswap/integrator.hpp"
#include "rydswap/parameters.hpp"

namespace rydswap {

namespace {

struct RabiAt {
    double t;
    double t_gate;

    double operator()(const TrianglePulse& p) const {
        double half = 0.5 * t_gate;
        double frac = t <= half ? t / half : (t_gate - t) / half;
        return p.omega_max * frac;
    }

    double operator()(const GaussianPulse& p) const {
        double half = 0.5 * t_gate;
        double edge = std::exp(-half * half / (2.0 * p.width * p.width));
        double core = std::exp(-(t - half) * (t - half) / (2.0 * p.width * p.width));
        return p.omega_max * (core - edge) / (1.0 - edge);
    }

    double operator()(const CompositePulse& p) const {
        return p.c0 + p.c1 * std::cos(kTwoPi * t / t_gate) +
               p.c2 * std::sin(0.5 * kTwoPi * t / t_gate);
    }
};

}  // namespace

double rabi(const PulseShape& shape, double t, double t_gate) {
    if (t < 0.0 || t > t_gate)
        throw std::domain_error("rabi: t outside [0, t_gate]");
    return std::visit(RabiAt{t, t_gate}, shape);
}

double max_abs_rabi(const PulseShape& shape, double t_gate, int grid_points) {
    if (const auto* tri = std::get_if<TrianglePulse>(&shape)) return std::abs(tri->omega_max);
    if (const auto* g = std::get_if<GaussianPulse>(&shape)) return std::abs(g->omega_max);
    double best = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        double t = t_gate * static_cast<double>(i) / (grid_points - 1);
        best = std::max(best, std::abs(rabi(shape, t, t_gate)));
    }
    return best;
}

EffectiveQuantities effective_quantities(double omega1, double omega2, double delta1,
                                         double delta2, double q) {
    if (delta1 == 0.0 || delta2 == 0.0)
        throw std::domain_error("effective_quantities: detunings must be nonzero");
    EffectiveQuantities eq;
    eq.omega_e = omega1 * omega2 * (1.0 / delta1 + 1.0 / delta2);
    eq.omega_c = omega1 * omega1 / delta1 + omega2 * omega2 / delta2;
    eq.delta = 2.0 * omega2 * omega2 / delta1 + 2.0 * omega1 * omega1 / delta2 + q;
    return eq;
}

PulseAreaResult effective_pulse_area(const GateParameters& params, int grid_points) {
    params.validate();
    double d1 = params.delta1;
    double d2 = params.delta2();
    if (d1 == 0.0 || d2 == 0.0)
        throw std::domain_error("effective_pulse_area: detunings must be nonzero");

    PulseAreaResult result;
    result.min_abs_delta = std::numeric_limits<double>::infinity();
    std::vector<double> integrand(static_cast<std::size_t>(grid_points));
    double dt = params.t_gate / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) {
        double t = dt * i;
        double o1 = rabi(params.pulse1, t, params.t_gate);
        double o2 = rabi(params.pulse2, t, params.t_gate);
        EffectiveQuantities eq = effective_quantities(o1, o2, d1, d2, params.q);
        result.min_abs_delta = std::min(result.min_abs_delta, std::abs(eq.delta));
        integrand[static_cast<std::size_t>(i)] =
            eq.delta == 0.0 ? 0.0 : 2.0 * eq.omega_e * eq.omega_e / eq.delta;
    }
    result.delta_near_zero = result.min_abs_delta < 1e-3;
    result.area = simpson_uniform(integrand, dt);
    return result;
}

}  // namespace rydswap
