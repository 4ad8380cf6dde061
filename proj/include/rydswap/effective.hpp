#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "rydswap/parameters.hpp"

namespace rydswap {

using Matrix3c = Eigen::Matrix3cd;
using Matrix9c = Eigen::Matrix<std::complex<double>, 9, 9>;

// Reduced swapping model over {|01>, |10>, |rr>} (in that order), used as an
// independent oracle against the full two-atom model.

// H = Omega_e(|rr><01| + |rr><10| + H.c.)
//   + Omega_c(|01><01| + |10><10|) + delta |rr><rr|
Matrix3c build_effective_h01(double t, const GateParameters& params);

// Accumulated dynamical phases of the dark inputs,
//   phi00 = int 2 Omega1^2/delta1 dt,  phi11 = int 2 Omega2^2/delta2 dt.
struct DarkStatePhases {
    double phi00 = 0.0;
    double phi11 = 0.0;
};
DarkStatePhases effective_phase_00_11(const GateParameters& params, int grid_points = 4001);

// Basis order of the retained 9-dim block:
// {00, 01, 10, 11, 0r, r0, 1r, r1, rr}.
enum EffectiveBasis9 : int {
    kEff00 = 0, kEff01 = 1, kEff10 = 2, kEff11 = 3,
    kEff0r = 4, kEffR0 = 5, kEff1r = 6, kEffR1 = 7, kEffRR = 8,
};

// Second-order reduction built literally from the commutator combination
//   [h1^dag, h1]/delta1 + [h2^dag, h2]/delta2 + q|rr><rr|.
Matrix9c effective_from_commutators(double t, const GateParameters& params);

// The same operator written out term by term (closed form); the two routes
// must agree entrywise.
Matrix9c effective_closed_form(double t, const GateParameters& params);

// Schroedinger evolution (no dissipation) of the reduced model.
struct EffectiveTrajectory {
    std::vector<double> times;
    std::vector<double> p00, p01, p10, p11, prr;
    double norm_error = 0.0;  // max |1 - <psi|psi>| over the run
};

// input is one of "00", "01", "10", "11". The dark inputs return flat unit
// population curves (their evolution is a pure phase).
EffectiveTrajectory simulate_effective(const std::string& input, const GateParameters& params,
                                       int steps = 0);

}  // namespace rydswap
