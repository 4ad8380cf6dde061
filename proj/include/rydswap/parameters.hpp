#pragma once

#include <string>
#include <vector>

#include "rydswap/constants.hpp"
#include "rydswap/pulses.hpp"

namespace rydswap {

// Everything defining one gate instance. Angular units (rad/us) throughout;
// delta2 is never stored: the antiblockade condition V = delta1 + delta2 + q
// fixes it.
struct GateParameters {
    PulseShape pulse1;  // drives |0> -> |r>
    PulseShape pulse2;  // drives |1> -> |r>
    double delta1 = 0.0;        // two-photon detuning of drive 1, rad/us
    double q = 0.0;             // antiblockade offset, rad/us
    double v0 = 0.0;            // nominal interaction V, rad/us
    double t_gate = 1.0;        // gate duration, us
    double gamma = kTwoPi / 400.0;  // Rydberg decay rate 2*pi/tau, rad/us
    BranchingRatios branching;

    double delta2() const { return v0 - delta1 - q; }

    void validate() const {
        if (t_gate <= 0.0) throw std::invalid_argument("GateParameters: t_gate must be positive");
        if (gamma < 0.0) throw std::invalid_argument("GateParameters: gamma must be non-negative");
        branching.validate();
    }

    // Large-detuning validity: |delta1| and |delta2| should each exceed twice
    // the corresponding pulse maximum. Advisory only.
    std::vector<std::string> validity_warnings() const;
};

}  // namespace rydswap
