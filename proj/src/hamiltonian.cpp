#include "rydswap/hamiltonian.hpp"

#include <cmath>

namespace rydswap {

namespace {

// Writes h(i,j) = v and h(j,i) = conj(v).
inline void set_pair(Operator& h, int i, int j, Complex v) {
    h(i, j) = v;
    h(j, i) = std::conj(v);
}

}  // namespace

Operator build_hamiltonian(double t, const GateParameters& params,
                           const NoiseRealization& realization) {
    if (t < 0.0 || t > params.t_gate)
        throw std::domain_error("build_hamiltonian: t outside [0, t_gate]");

    double o1 = rabi(params.pulse1, t, params.t_gate) + realization.omega_offset1;
    double o2 = rabi(params.pulse2, t, params.t_gate) + realization.omega_offset2;
    double phi1 = (params.delta1 + realization.alpha1) * t;
    double phi2 = (params.delta2() + realization.alpha2) * t;
    Complex e1 = std::polar(1.0, -phi1);
    Complex e2 = std::polar(1.0, -phi2);

    // <r|H_j|0> = Omega1 s_j e^{-i(delta1+alpha1)t}, <r|H_j|1> likewise.
    Complex a1_atom1 = o1 * realization.drive_scale1() * e1;
    Complex a2_atom1 = o2 * realization.drive_scale1() * e2;
    Complex a1_atom2 = o1 * realization.drive_scale2() * e1;
    Complex a2_atom2 = o2 * realization.drive_scale2() * e2;

    Operator h = Operator::Zero();
    for (int k = 0; k < kLevels; ++k) {
        set_pair(h, pair_index(kLevelR, k), pair_index(kLevel0, k), a1_atom1);
        set_pair(h, pair_index(kLevelR, k), pair_index(kLevel1, k), a2_atom1);
        set_pair(h, pair_index(k, kLevelR), pair_index(k, kLevel0), a1_atom2);
        set_pair(h, pair_index(k, kLevelR), pair_index(k, kLevel1), a2_atom2);
    }
    h(kIdxRR, kIdxRR) = realization.v_realized;
    return h;
}

Operator build_static_frame_hamiltonian(double t, const GateParameters& params,
                                        const NoiseRealization& realization) {
    if (t < 0.0 || t > params.t_gate)
        throw std::domain_error("build_static_frame_hamiltonian: t outside [0, t_gate]");
    if (realization.has_doppler())
        throw std::invalid_argument(
            "build_static_frame_hamiltonian: Doppler offsets are not representable in the "
            "static frame");

    double o1 = rabi(params.pulse1, t, params.t_gate) + realization.omega_offset1;
    double o2 = rabi(params.pulse2, t, params.t_gate) + realization.omega_offset2;
    double a1_atom1 = o1 * realization.drive_scale1();
    double a2_atom1 = o2 * realization.drive_scale1();
    double a1_atom2 = o1 * realization.drive_scale2();
    double a2_atom2 = o2 * realization.drive_scale2();

    // Per-atom diagonal (E_0, E_1, E_r, E_alpha) = (0, d1 - d2, d1, 0); the
    // frame rotation is diagonal so populations are unchanged.
    double d1 = params.delta1;
    double d2 = params.delta2();
    const double energy[kLevels] = {0.0, d1 - d2, d1, 0.0};

    Operator h = Operator::Zero();
    for (int k = 0; k < kLevels; ++k) {
        set_pair(h, pair_index(kLevelR, k), pair_index(kLevel0, k), Complex(a1_atom1, 0.0));
        set_pair(h, pair_index(kLevelR, k), pair_index(kLevel1, k), Complex(a2_atom1, 0.0));
        set_pair(h, pair_index(k, kLevelR), pair_index(k, kLevel0), Complex(a1_atom2, 0.0));
        set_pair(h, pair_index(k, kLevelR), pair_index(k, kLevel1), Complex(a2_atom2, 0.0));
    }
    for (int i = 0; i < kDim; ++i)
        h(i, i) = energy[atom1_level(i)] + energy[atom2_level(i)];
    h(kIdxRR, kIdxRR) += realization.v_realized;
    return h;
}

std::vector<Operator> build_decay_channels(double gamma, const BranchingRatios& branching) {
    branching.validate();
    if (gamma < 0.0) throw std::domain_error("build_decay_channels: gamma must be non-negative");

    const double etas[3] = {branching.eta_r0, branching.eta_r1, branching.eta_alpha};
    const int targets[3] = {kLevel0, kLevel1, kLevelAlpha};

    std::vector<Operator> channels;
    channels.reserve(6);
    for (int c = 0; c < 3; ++c) {
        double amp = std::sqrt(etas[c] * gamma);
        Operator l1 = Operator::Zero();
        Operator l2 = Operator::Zero();
        for (int k = 0; k < kLevels; ++k) {
            l1(pair_index(targets[c], k), pair_index(kLevelR, k)) = amp;
            l2(pair_index(k, targets[c]), pair_index(k, kLevelR)) = amp;
        }
        channels.push_back(l1);
        channels.push_back(l2);
    }
    return channels;
}

std::vector<Operator> build_dephasing_channels(double gamma0) {
    if (gamma0 < 0.0)
        throw std::domain_error("build_dephasing_channels: gamma0 must be non-negative");
    double amp = std::sqrt(0.5 * gamma0);

    std::vector<Operator> channels;
    channels.reserve(4);
    for (int g : {kLevel0, kLevel1}) {
        for (int atom = 1; atom <= 2; ++atom) {
            Operator l = Operator::Zero();
            for (int k = 0; k < kLevels; ++k) {
                int r_idx = atom == 1 ? pair_index(kLevelR, k) : pair_index(k, kLevelR);
                int g_idx = atom == 1 ? pair_index(g, k) : pair_index(k, g);
                l(r_idx, r_idx) = amp;
                l(g_idx, g_idx) = -amp;
            }
            channels.push_back(l);
        }
    }
    return channels;
}

}  // namespace rydswap
