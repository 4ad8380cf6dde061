#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>

namespace rydswap {

using Complex = std::complex<double>;

// Single-atom levels. All modules share this ordering.
enum Level : int { kLevel0 = 0, kLevel1 = 1, kLevelR = 2, kLevelAlpha = 3 };

inline constexpr int kLevels = 4;
inline constexpr int kDim = 16;  // two-atom Hilbert space

// Two-atom product index: 4*(atom-1 level) + (atom-2 level).
inline constexpr int pair_index(int l1, int l2) { return kLevels * l1 + l2; }
inline constexpr int atom1_level(int idx) { return idx / kLevels; }
inline constexpr int atom2_level(int idx) { return idx % kLevels; }

inline constexpr int kIdx00 = pair_index(kLevel0, kLevel0);
inline constexpr int kIdx01 = pair_index(kLevel0, kLevel1);
inline constexpr int kIdx10 = pair_index(kLevel1, kLevel0);
inline constexpr int kIdx11 = pair_index(kLevel1, kLevel1);
inline constexpr int kIdxRR = pair_index(kLevelR, kLevelR);

// Dense two-atom operator / density matrix.
using Operator = Eigen::Matrix<Complex, kDim, kDim>;

inline const char* level_name(int level) {
    static const std::array<const char*, 4> names = {"0", "1", "r", "alpha"};
    return names.at(static_cast<std::size_t>(level));
}

// Column label for population CSVs, e.g. p_01, p_rr, p_alpha_alpha.
std::string population_label(int idx);

// |idx><idx| as a density matrix.
Operator basis_density(int idx);

double hermiticity_error(const Operator& m);   // max |m - m^dagger|
double trace_error(const Operator& rho);       // |tr(rho) - 1|
double min_eigenvalue(const Operator& rho);    // smallest eigenvalue of (rho+rho^dagger)/2

}  // namespace rydswap
