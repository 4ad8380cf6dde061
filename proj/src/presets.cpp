#include "rydswap/presets.hpp"

#include <cmath>

namespace rydswap {
namespace presets {

namespace {

constexpr double kVMhz = 70.49;       // nominal interaction V/2pi
constexpr double kTauR = 400.0;       // Rydberg lifetime, us

GateParameters base(double t_gate, const BranchingRatios& branching) {
    GateParameters p;
    p.v0 = mhz_to_rad_us(kVMhz);
    p.t_gate = t_gate;
    p.gamma = kTwoPi / kTauR;
    p.branching = branching;
    return p;
}

const BranchingRatios kEqualBranching{0.5, 0.5, 0.0};
const BranchingRatios kLeakyBranching{0.125, 0.125, 0.75};

}  // namespace

GateParameters case_i(bool modified) {
    GateParameters p = base(1.0, kEqualBranching);
    if (modified) {
        p.pulse1 = TrianglePulse{mhz_to_rad_us(5.513)};
        p.pulse2 = TrianglePulse{mhz_to_rad_us(10.947)};
        p.delta1 = mhz_to_rad_us(23.090);
        p.q = mhz_to_rad_us(4.668);
    } else {
        p.pulse1 = TrianglePulse{mhz_to_rad_us(3.769)};
        p.pulse2 = TrianglePulse{mhz_to_rad_us(10.441)};
        p.delta1 = mhz_to_rad_us(26.642);
        p.q = 0.0;
    }
    return p;
}

GateParameters case_ii(bool modified) {
    GateParameters p = base(1.0, kEqualBranching);
    if (modified) {
        p.pulse1 = GaussianPulse{mhz_to_rad_us(5.114), 0.257};
        p.pulse2 = GaussianPulse{mhz_to_rad_us(8.948), 0.351};
        p.delta1 = mhz_to_rad_us(22.110);
        p.q = mhz_to_rad_us(5.037);
    } else {
        p.pulse1 = GaussianPulse{mhz_to_rad_us(3.595), 0.279};
        p.pulse2 = GaussianPulse{mhz_to_rad_us(9.219), 0.189};
        p.delta1 = mhz_to_rad_us(23.924);
        p.q = 0.0;
    }
    return p;
}

GateParameters case_iii(bool modified) {
    GateParameters p = base(1.0, kEqualBranching);
    if (modified) {
        p.pulse1 = CompositePulse{mhz_to_rad_us(1.774), mhz_to_rad_us(-1.884),
                                  mhz_to_rad_us(2.036)};
        p.pulse2 = CompositePulse{mhz_to_rad_us(2.558), mhz_to_rad_us(-2.624),
                                  mhz_to_rad_us(2.608)};
        p.delta1 = mhz_to_rad_us(22.532);
        p.q = mhz_to_rad_us(5.090);
    } else {
        p.pulse1 = CompositePulse{mhz_to_rad_us(1.033), mhz_to_rad_us(-1.167),
                                  mhz_to_rad_us(1.334)};
        p.pulse2 = CompositePulse{mhz_to_rad_us(3.100), mhz_to_rad_us(-2.662),
                                  mhz_to_rad_us(2.617)};
        p.delta1 = mhz_to_rad_us(25.194);
        p.q = 0.0;
    }
    return p;
}

GateParameters appendix_b1() {
    GateParameters p = base(0.8894, kLeakyBranching);
    p.pulse1 = GaussianPulse{mhz_to_rad_us(4.969), 0.4948};
    p.pulse2 = GaussianPulse{mhz_to_rad_us(9.728), 0.5318};
    p.delta1 = mhz_to_rad_us(22.951);
    p.q = mhz_to_rad_us(6.051);
    return p;
}

GateParameters appendix_b2() {
    GateParameters p = base(0.1177, kLeakyBranching);
    p.pulse1 = GaussianPulse{mhz_to_rad_us(37.413), 0.0586};
    p.pulse2 = GaussianPulse{mhz_to_rad_us(48.404), 1.6082};
    p.delta1 = mhz_to_rad_us(-94.133);
    p.q = mhz_to_rad_us(33.429);
    return p;
}

InputSuperposition benchmark_superposition() {
    InputSuperposition s;
    s.a00 = Complex(1.0 / std::sqrt(10.0), 0.0);
    s.a01 = Complex(std::sqrt(7.0 / 10.0), 0.0);
    s.a10 = Complex(std::sqrt(7.0 / 40.0), 0.0);
    s.a11 = Complex(1.0 / std::sqrt(40.0), 0.0);
    return s;
}

}  // namespace presets
}  // namespace rydswap
