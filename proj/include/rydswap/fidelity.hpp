#pragma once

#include "rydswap/integrator.hpp"

namespace rydswap {

// Normalized two-qubit input a00|00> + a01|01> + a10|10> + a11|11>.
struct InputSuperposition {
    Complex a00{0.0, 0.0};
    Complex a01{0.0, 0.0};
    Complex a10{0.0, 0.0};
    Complex a11{0.0, 0.0};

    void validate() const;
    Eigen::Vector<Complex, kDim> embed() const;  // amplitudes in the 16-basis
};

// Amplitude exchange a01 <-> a10; a00 and a11 unchanged, no phase applied.
InputSuperposition ideal_swap_target(const InputSuperposition& input);

enum class FidelityMode { kUhlmann, kOverlap };

// Per-computational-input fidelities against the phase-free SWAP targets and
// their 4-state average. kUhlmann takes sqrt(<psi|rho|psi>) per state (the
// pure-target Uhlmann fidelity), kOverlap the bare overlap; kUhlmann is the
// convention used for every reported comparison.
struct GateFidelityResult {
    double average = 0.0;
    std::array<double, 4> per_input{};  // order: 00, 01, 10, 11
};

GateFidelityResult average_gate_fidelity_detail(const GateParameters& params,
                                                const NoiseRealization& realization,
                                                FidelityMode mode = FidelityMode::kUhlmann,
                                                int steps = 0);

double average_gate_fidelity(const GateParameters& params, const NoiseRealization& realization,
                             FidelityMode mode = FidelityMode::kUhlmann, int steps = 0);

// Uhlmann fidelity of one evolved superposition against its ideal swapped
// image, sqrt(<psi_ideal|rho(T_g)|psi_ideal>).
double state_swap_fidelity(const InputSuperposition& input, const GateParameters& params,
                           const NoiseRealization& realization, int steps = 0);

}  // namespace rydswap
