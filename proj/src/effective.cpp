#include "rydswap/effective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rydswap/integrator.hpp"

namespace rydswap {

namespace {

void require_detunings(const GateParameters& params) {
    if (params.delta1 == 0.0 || params.delta2() == 0.0)
        throw std::domain_error("effective model: detunings must be nonzero");
}

struct PulsePair {
    double o1;
    double o2;
};

PulsePair pulses_at(double t, const GateParameters& params) {
    return {rabi(params.pulse1, t, params.t_gate), rabi(params.pulse2, t, params.t_gate)};
}

}  // namespace

Matrix3c build_effective_h01(double t, const GateParameters& params) {
    require_detunings(params);
    auto [o1, o2] = pulses_at(t, params);
    EffectiveQuantities eq = effective_quantities(o1, o2, params.delta1, params.delta2(), params.q);

    // Basis {|01>, |10>, |rr>}.
    Matrix3c h = Matrix3c::Zero();
    h(0, 0) = eq.omega_c;
    h(1, 1) = eq.omega_c;
    h(2, 2) = eq.delta;
    h(2, 0) = eq.omega_e;
    h(0, 2) = eq.omega_e;
    h(2, 1) = eq.omega_e;
    h(1, 2) = eq.omega_e;
    return h;
}

DarkStatePhases effective_phase_00_11(const GateParameters& params, int grid_points) {
    require_detunings(params);
    std::vector<double> f00(static_cast<std::size_t>(grid_points));
    std::vector<double> f11(static_cast<std::size_t>(grid_points));
    double dt = params.t_gate / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) {
        auto [o1, o2] = pulses_at(dt * i, params);
        f00[static_cast<std::size_t>(i)] = 2.0 * o1 * o1 / params.delta1;
        f11[static_cast<std::size_t>(i)] = 2.0 * o2 * o2 / params.delta2();
    }
    return {simpson_uniform(f00, dt), simpson_uniform(f11, dt)};
}

Matrix9c effective_from_commutators(double t, const GateParameters& params) {
    require_detunings(params);
    auto [o1, o2] = pulses_at(t, params);

    // h1, h2 in the 9-basis {00, 01, 10, 11, 0r, r0, 1r, r1, rr}.
    Matrix9c h1 = Matrix9c::Zero();
    h1(kEffR1, kEff01) = o1;
    h1(kEffR0, kEff00) = o1;
    h1(kEff0r, kEff00) = o1;
    h1(kEff1r, kEff10) = o1;
    h1(kEff1r, kEffRR) = o2;
    h1(kEffR1, kEffRR) = o2;

    Matrix9c h2 = Matrix9c::Zero();
    h2(kEff0r, kEff01) = o2;
    h2(kEff1r, kEff11) = o2;
    h2(kEffR1, kEff11) = o2;
    h2(kEffR0, kEff10) = o2;
    h2(kEff0r, kEffRR) = o1;
    h2(kEffR0, kEffRR) = o1;

    Matrix9c eff = (h1.adjoint() * h1 - h1 * h1.adjoint()) / params.delta1 +
                   (h2.adjoint() * h2 - h2 * h2.adjoint()) / params.delta2();
    eff(kEffRR, kEffRR) += params.q;
    return eff;
}

Matrix9c effective_closed_form(double t, const GateParameters& params) {
    require_detunings(params);
    auto [o1, o2] = pulses_at(t, params);
    double d1 = params.delta1;
    double d2 = params.delta2();
    EffectiveQuantities eq = effective_quantities(o1, o2, d1, d2, params.q);

    Matrix9c h = Matrix9c::Zero();
    h(kEff00, kEff00) = 2.0 * o1 * o1 / d1;
    h(kEff11, kEff11) = 2.0 * o2 * o2 / d2;
    h(kEff01, kEff01) = eq.omega_c;
    h(kEff10, kEff10) = eq.omega_c;
    h(kEffRR, kEffRR) = eq.delta;
    h(kEffRR, kEff01) = eq.omega_e;
    h(kEff01, kEffRR) = eq.omega_e;
    h(kEffRR, kEff10) = eq.omega_e;
    h(kEff10, kEffRR) = eq.omega_e;

    // Singly-excited block: closed annex of the same reduction; it has no
    // matrix element into the computational states.
    double cross01 = o1 * o1 * (1.0 / d1 + 1.0 / d2);
    double diag0 = o1 * o1 / d1 + (o1 * o1 + o2 * o2) / d2;
    double cross1r = o2 * o2 * (1.0 / d1 + 1.0 / d2);
    double diag1 = o2 * o2 / d2 + (o1 * o1 + o2 * o2) / d1;
    h(kEffR0, kEff0r) = -cross01;
    h(kEff0r, kEffR0) = -cross01;
    h(kEffR0, kEffR0) = -diag0;
    h(kEff0r, kEff0r) = -diag0;
    h(kEffR1, kEff1r) = -cross1r;
    h(kEff1r, kEffR1) = -cross1r;
    h(kEffR1, kEffR1) = -diag1;
    h(kEff1r, kEff1r) = -diag1;
    return h;
}

EffectiveTrajectory simulate_effective(const std::string& input, const GateParameters& params,
                                       int steps) {
    params.validate();
    if (steps == 0) steps = default_steps(params.t_gate);
    if (steps < 1) throw std::invalid_argument("simulate_effective: steps must be positive");

    EffectiveTrajectory traj;
    std::size_t npoints = static_cast<std::size_t>(steps) + 1;
    traj.times.resize(npoints);
    traj.p00.assign(npoints, 0.0);
    traj.p01.assign(npoints, 0.0);
    traj.p10.assign(npoints, 0.0);
    traj.p11.assign(npoints, 0.0);
    traj.prr.assign(npoints, 0.0);
    double h = params.t_gate / steps;
    for (int i = 0; i <= steps; ++i)
        traj.times[static_cast<std::size_t>(i)] = i == steps ? params.t_gate : h * i;

    if (input == "00" || input == "11") {
        // Dark inputs evolve by a pure phase; their population stays put.
        auto& flat = input == "00" ? traj.p00 : traj.p11;
        std::fill(flat.begin(), flat.end(), 1.0);
        return traj;
    }
    if (input != "01" && input != "10")
        throw std::invalid_argument("simulate_effective: input must be one of 00, 01, 10, 11");

    Eigen::Vector3cd psi = Eigen::Vector3cd::Zero();
    psi(input == "01" ? 0 : 1) = Complex(1.0, 0.0);

    auto record = [&](int i) {
        traj.p01[static_cast<std::size_t>(i)] = std::norm(psi(0));
        traj.p10[static_cast<std::size_t>(i)] = std::norm(psi(1));
        traj.prr[static_cast<std::size_t>(i)] = std::norm(psi(2));
        traj.norm_error = std::max(traj.norm_error, std::abs(1.0 - psi.squaredNorm()));
    };
    record(0);

    auto rhs = [&](double t, const Eigen::Vector3cd& v) -> Eigen::Vector3cd {
        return Complex(0.0, -1.0) * (build_effective_h01(t, params) * v);
    };
    for (int step = 0; step < steps; ++step) {
        double t = h * step;
        Eigen::Vector3cd k1 = rhs(t, psi);
        Eigen::Vector3cd k2 = rhs(t + 0.5 * h, psi + 0.5 * h * k1);
        Eigen::Vector3cd k3 = rhs(t + 0.5 * h, psi + 0.5 * h * k2);
        Eigen::Vector3cd k4 = rhs(step + 1 == steps ? params.t_gate : t + h, psi + h * k3);
        psi += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        record(step + 1);
    }
    return traj;
}

}  // namespace rydswap
