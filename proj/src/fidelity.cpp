#include "rydswap/fidelity.hpp"

#include <algorithm>
#include <cmath>

namespace rydswap {

void InputSuperposition::validate() const {
    double norm2 = std::norm(a00) + std::norm(a01) + std::norm(a10) + std::norm(a11);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("InputSuperposition: amplitudes must be normalized");
}

Eigen::Vector<Complex, kDim> InputSuperposition::embed() const {
    Eigen::Vector<Complex, kDim> psi = Eigen::Vector<Complex, kDim>::Zero();
    psi(kIdx00) = a00;
    psi(kIdx01) = a01;
    psi(kIdx10) = a10;
    psi(kIdx11) = a11;
    return psi;
}

InputSuperposition ideal_swap_target(const InputSuperposition& input) {
    input.validate();
    InputSuperposition out = input;
    std::swap(out.a01, out.a10);
    return out;
}

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double pure_target_fidelity(const Operator& rho, const Eigen::Vector<Complex, kDim>& target,
                            FidelityMode mode) {
    double overlap = clamp01((target.adjoint() * rho * target).value().real());
    return mode == FidelityMode::kUhlmann ? std::sqrt(overlap) : overlap;
}

}  // namespace

GateFidelityResult average_gate_fidelity_detail(const GateParameters& params,
                                                const NoiseRealization& realization,
                                                FidelityMode mode, int steps) {
    static constexpr int inputs[4] = {kIdx00, kIdx01, kIdx10, kIdx11};
    static constexpr int targets[4] = {kIdx00, kIdx10, kIdx01, kIdx11};

    GateFidelityResult result;
    for (int k = 0; k < 4; ++k) {
        Trajectory traj = evolve(basis_density(inputs[k]), params, realization, steps);
        Eigen::Vector<Complex, kDim> target = Eigen::Vector<Complex, kDim>::Zero();
        target(targets[k]) = Complex(1.0, 0.0);
        result.per_input[static_cast<std::size_t>(k)] =
            pure_target_fidelity(traj.rho_final, target, mode);
    }
    result.average = 0.25 * (result.per_input[0] + result.per_input[1] + result.per_input[2] +
                             result.per_input[3]);
    return result;
}

double average_gate_fidelity(const GateParameters& params, const NoiseRealization& realization,
                             FidelityMode mode, int steps) {
    return average_gate_fidelity_detail(params, realization, mode, steps).average;
}

double state_swap_fidelity(const InputSuperposition& input, const GateParameters& params,
                           const NoiseRealization& realization, int steps) {
    input.validate();
    Eigen::Vector<Complex, kDim> psi0 = input.embed();
    Operator rho0 = psi0 * psi0.adjoint();
    Trajectory traj = evolve(rho0, params, realization, steps);
    Eigen::Vector<Complex, kDim> target = ideal_swap_target(input).embed();
    return pure_target_fidelity(traj.rho_final, target, FidelityMode::kUhlmann);
}

}  // namespace rydswap
