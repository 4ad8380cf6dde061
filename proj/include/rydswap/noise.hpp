#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rydswap/fidelity.hpp"
#include "rydswap/rng.hpp"

namespace rydswap {

// Stochastic noise channels. Any subset may be active; sample_noise draws one
// realization of every active channel.
struct NoiseSpec {
    enum class Interaction { kNone, kUniform, kGaussianPosition };
    enum class Switch { kNone, kOn };

    Interaction interaction = Interaction::kNone;
    double dv_over_v = 0.0;          // uniform: relative half-width of V
    double position_temperature = 0.0;  // gaussian_position: K
    double trap_freq = 0.0;          // gaussian_position: rad/us

    Switch doppler = Switch::kNone;
    double doppler_temperature = 0.0;  // K

    enum class Intensity { kNone, kUniform };
    Intensity intensity = Intensity::kNone;
    double delta_omega = 0.0;        // relative half-width of the amplitude draw
    bool intensity_additive = false; // alternative reading: constant offset of
                                     // delta_omega * Omega_max instead of a
                                     // multiplicative rescale

    enum class Phase { kNone, kUniform };
    Phase phase = Phase::kNone;
    double gamma0_max = 0.0;         // rad/us; per-sample gamma0 ~ U[0, gamma0_max]

    Switch beam = Switch::kNone;
    double waist = 0.0;              // um
    double beam_sigma = 0.0;         // um, transverse position spread per axis

    int samples = 300;
    std::uint64_t seed = 0;

    void validate() const;
    bool any_active() const;
    int active_channel_count() const;
};

// Draw one realization of every active channel. v0 fixes the nominal
// interaction (and, for the position model, the nominal distance).
NoiseRealization sample_noise(const NoiseSpec& spec, const GateParameters& params,
                              const PhysicalConstants& constants, Rng& rng);

struct MonteCarloResult {
    double mean = 0.0;
    double stddev = 0.0;
    double std_error = 0.0;
    int n = 0;
    int excluded = 0;  // samples dropped on integration-quality errors
};

// Mean gate fidelity over spec.samples independent realizations. Sample i
// always uses RNG sub-stream (seed, i) and results are reduced in index
// order, so the outcome is identical for any worker count.
MonteCarloResult monte_carlo_fidelity(const GateParameters& params, const NoiseSpec& spec,
                                      const PhysicalConstants& constants = {},
                                      int threads = 0, int steps = 0);

struct BudgetRow {
    std::string source;      // position | doppler | intensity | phase | beam
    double infidelity = 0.0; // F(no-noise) - mean F(source on)
    MonteCarloResult mc;
};

// Per-noise-source infidelity report. The conservative fidelity follows the
// additive convention: perfect fidelity minus the summed technical
// infidelities. A jointly-sampled combined estimate is reported separately.
struct ErrorBudget {
    double f_perfect = 0.0;
    double decay_infidelity = 0.0;  // 1 - f_perfect
    std::vector<BudgetRow> rows;
    double conservative_fidelity = 0.0;
    std::optional<MonteCarloResult> joint;
    int samples = 0;
    std::uint64_t seed = 0;
};

// Each spec in the set must have exactly one active channel. When
// with_joint is set, a spec combining all listed channels is also sampled.
ErrorBudget error_budget(const GateParameters& params, const std::vector<NoiseSpec>& spec_set,
                         const PhysicalConstants& constants = {}, int threads = 0,
                         int steps = 0, bool with_joint = true);

// Splits a multi-channel spec into single-channel specs (budget rows).
std::vector<NoiseSpec> split_noise_channels(const NoiseSpec& combined);

// Human-readable name of the single active channel of a spec.
std::string active_channel_name(const NoiseSpec& spec);

}  // namespace rydswap
