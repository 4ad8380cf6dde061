#pragma once

#include "rydswap/fidelity.hpp"
#include "rydswap/parameters.hpp"

namespace rydswap {
namespace presets {

// Optimized 1.0-us gates at V/2pi = 70.49 MHz with branching (1/2, 1/2, 0).
GateParameters case_i(bool modified);    // isosceles-triangle pulses
GateParameters case_ii(bool modified);   // corrected-Gaussian pulses
GateParameters case_iii(bool modified);  // composite pulses

// Gate-duration-optimized Gaussian gates with branching (1/8, 1/8, 3/4):
// b1 caps the Rabi frequencies at 2pi*10 MHz (T_g = 0.8894 us), b2 at
// 2pi*50 MHz (T_g = 0.1177 us).
GateParameters appendix_b1();
GateParameters appendix_b2();

// Arbitrary-initialization benchmark state
// (1/sqrt(10), sqrt(7/10), sqrt(7/40), 1/sqrt(40)).
InputSuperposition benchmark_superposition();

}  // namespace presets
}  // namespace rydswap
