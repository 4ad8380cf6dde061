#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "rydswap/hamiltonian.hpp"

namespace rydswap {

// Time grid plus per-time diagonal populations and the final density matrix.
struct Trajectory {
    std::vector<double> times;                       // 0 .. t_gate, uniform
    std::vector<std::array<double, kDim>> populations;
    Operator rho_final;

    double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
};

// Raised when the integrated state stops looking like a density matrix.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, int step)
        : std::runtime_error(what + " at step " + std::to_string(step)), step_(step) {}
    int step() const { return step_; }

private:
    int step_;
};

// Right-hand side of the Lindblad master equation,
//   -i[H, rho] + 1/2 sum_j (2 Lj rho Lj^dag - Lj^dag Lj rho - rho Lj^dag Lj).
Operator lindblad_rhs(const Operator& rho, const Operator& h,
                      const std::vector<Operator>& channels);

// Step count used when the caller passes steps = 0: 4000 per us of gate,
// never less than 1000.
int default_steps(double t_gate);

// Classical fixed-step RK4 over [0, t_gate] in the laser frame, Hamiltonian
// rebuilt at every stage time. Dephasing channels are included when the
// realization carries gamma0 > 0. rho is symmetrized after each step; trace
// and positivity are monitored and violations raise IntegrationError.
Trajectory evolve(const Operator& rho0, const GateParameters& params,
                  const NoiseRealization& realization, int steps = 0);

// Same evolution in the static frame (test oracle; requires zero Doppler).
Trajectory evolve_static_frame(const Operator& rho0, const GateParameters& params,
                               const NoiseRealization& realization, int steps = 0);

// Simpson quadrature of one population column over the trajectory grid.
double time_in_state(const Trajectory& traj, int basis_index);

// Composite Simpson for tabulated samples on a uniform grid (odd or even
// interval counts both handled); shared by the pulse-area and phase
// integrals.
double simpson_uniform(const std::vector<double>& samples, double dt);

}  // namespace rydswap
