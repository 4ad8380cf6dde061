#pragma once

#include <vector>

#include "rydswap/basis.hpp"
#include "rydswap/realization.hpp"

namespace rydswap {

// Two-atom drive Hamiltonian in the laser frame,
//   H = H1 x I + I x H2 + V |rr><rr|,
//   Hj = Omega1(t) sj e^{-i(delta1+alpha1)t} |r>j<0|
//      + Omega2(t) sj e^{-i(delta2+alpha2)t} |r>j<1| + H.c.
// sj is the atom's amplitude factor and V the realized interaction from the
// noise realization. |alpha> is uncoupled by every drive term.
Operator build_hamiltonian(double t, const GateParameters& params,
                           const NoiseRealization& realization);

// Phase-free equivalent used as an integration oracle: static diagonal
// energies (0, delta1-delta2, delta1) per atom absorb the drive phases, the
// interaction diagonal stays V |rr><rr|. Populations of the evolved state
// match build_hamiltonian exactly; only valid with zero Doppler offsets.
Operator build_static_frame_hamiltonian(double t, const GateParameters& params,
                                        const NoiseRealization& realization);

// The six Rydberg scattering channels sqrt(eta*gamma)|g>j<r| for
// g in {0, 1, alpha} and j in {1, 2}, embedded in the two-atom space.
// Channels with eta = 0 are zero operators, kept for index stability.
std::vector<Operator> build_decay_channels(double gamma, const BranchingRatios& branching);

// Four laser-phase dephasing channels sqrt(gamma0/2)(|r><r| - |g><g|) per
// atom for g in {0, 1}. There is no |r>-|alpha> channel: no laser pulse
// couples them.
std::vector<Operator> build_dephasing_channels(double gamma0);

}  // namespace rydswap
