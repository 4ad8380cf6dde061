#include "rydswap/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rydswap/parallel.hpp"

namespace rydswap {

void NoiseSpec::validate() const {
    if (samples < 1) throw std::invalid_argument("NoiseSpec: samples must be at least 1");
    if (interaction == Interaction::kUniform && (dv_over_v < 0.0 || dv_over_v >= 1.0))
        throw std::invalid_argument("NoiseSpec: dv_over_v must lie in [0,1)");
    if (interaction == Interaction::kGaussianPosition &&
        (position_temperature < 0.0 || trap_freq <= 0.0))
        throw std::invalid_argument("NoiseSpec: gaussian position model needs T >= 0 and trap_freq > 0");
    if (doppler == Switch::kOn && doppler_temperature < 0.0)
        throw std::invalid_argument("NoiseSpec: doppler temperature must be non-negative");
    if (intensity == Intensity::kUniform && (delta_omega < 0.0 || delta_omega >= 1.0))
        throw std::invalid_argument("NoiseSpec: delta_omega must lie in [0,1)");
    if (phase == Phase::kUniform && gamma0_max < 0.0)
        throw std::invalid_argument("NoiseSpec: gamma0_max must be non-negative");
    if (beam == Switch::kOn && (waist <= 0.0 || beam_sigma < 0.0))
        throw std::invalid_argument("NoiseSpec: beam model needs waist > 0 and sigma >= 0");
}

bool NoiseSpec::any_active() const { return active_channel_count() > 0; }

int NoiseSpec::active_channel_count() const {
    int n = 0;
    n += interaction != Interaction::kNone;
    n += doppler == Switch::kOn;
    n += intensity != Intensity::kNone;
    n += phase != Phase::kNone;
    n += beam == Switch::kOn;
    return n;
}

NoiseRealization sample_noise(const NoiseSpec& spec, const GateParameters& params,
                              const PhysicalConstants& constants, Rng& rng) {
    spec.validate();
    NoiseRealization real = NoiseRealization::ideal(params);

    switch (spec.interaction) {
        case NoiseSpec::Interaction::kNone:
            break;
        case NoiseSpec::Interaction::kUniform: {
            double u = rng.uniform(-spec.dv_over_v, spec.dv_over_v);
            real.v_realized = params.v0 * (1.0 + u);
            break;
        }
        case NoiseSpec::Interaction::kGaussianPosition: {
            // sigma_r = sqrt(kB T / m) / omega; v_rms in m/s equals um/us.
            double sigma_r = constants.v_rms(spec.position_temperature) / spec.trap_freq;
            double r0 = std::pow(constants.c6 / rad_us_to_mhz(params.v0), 1.0 / 6.0);
            double r = rng.normal(r0, sigma_r);
            while (r <= 0.0) r = rng.normal(r0, sigma_r);
            real.v_realized = interaction_strength(r, constants);
            break;
        }
    }

    if (spec.doppler == NoiseSpec::Switch::kOn) {
        // k_eff [1/m] * v_rms [m/s] is an angular rate in rad/s; 1e-6 -> rad/us.
        double v = constants.v_rms(spec.doppler_temperature);
        real.alpha1 = rng.normal(0.0, constants.k1_eff * v * 1e-6);
        real.alpha2 = rng.normal(0.0, constants.k2_eff * v * 1e-6);
    }

    if (spec.intensity == NoiseSpec::Intensity::kUniform) {
        double eps = rng.uniform(-spec.delta_omega, spec.delta_omega);
        if (spec.intensity_additive) {
            // Alternative reading: constant offset eps * Omega_max added to
            // each pulse instead of a shape-preserving rescale.
            real.omega_offset1 = eps * max_abs_rabi(params.pulse1, params.t_gate);
            real.omega_offset2 = eps * max_abs_rabi(params.pulse2, params.t_gate);
        } else {
            real.intensity_scale = 1.0 + eps;
        }
    }

    if (spec.phase == NoiseSpec::Phase::kUniform)
        real.gamma0_realized = rng.uniform(0.0, spec.gamma0_max);

    if (spec.beam == NoiseSpec::Switch::kOn) {
        auto scale = [&]() {
            double x = rng.normal(0.0, spec.beam_sigma);
            double y = rng.normal(0.0, spec.beam_sigma);
            return std::exp(-(x * x + y * y) / (spec.waist * spec.waist));
        };
        real.spatial_scale1 = scale();
        real.spatial_scale2 = scale();
    }

    return real;
}

MonteCarloResult monte_carlo_fidelity(const GateParameters& params, const NoiseSpec& spec,
                                      const PhysicalConstants& constants, int threads,
                                      int steps) {
    spec.validate();
    params.validate();
    std::size_t n = static_cast<std::size_t>(spec.samples);
    std::vector<double> fidelities(n, 0.0);
    std::vector<char> ok(n, 0);

    parallel_for(n, threads, [&](std::size_t i) {
        Rng rng = Rng::substream(spec.seed, i);
        NoiseRealization real = sample_noise(spec, params, constants, rng);
        try {
            fidelities[i] = average_gate_fidelity(params, real, FidelityMode::kUhlmann, steps);
            ok[i] = 1;
        } catch (const IntegrationError&) {
            ok[i] = 0;
        }
    });

    MonteCarloResult result;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!ok[i]) {
            ++result.excluded;
            continue;
        }
        sum += fidelities[i];
        ++result.n;
    }
    if (result.n == 0) throw IntegrationError("all Monte Carlo samples failed", 0);
    result.mean = sum / result.n;
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!ok[i]) continue;
        double d = fidelities[i] - result.mean;
        var += d * d;
    }
    if (result.n > 1) var /= (result.n - 1);
    result.stddev = std::sqrt(var);
    result.std_error = result.stddev / std::sqrt(static_cast<double>(result.n));
    return result;
}

std::vector<NoiseSpec> split_noise_channels(const NoiseSpec& combined) {
    combined.validate();
    std::vector<NoiseSpec> out;
    NoiseSpec blank = combined;
    blank.interaction = NoiseSpec::Interaction::kNone;
    blank.doppler = NoiseSpec::Switch::kNone;
    blank.intensity = NoiseSpec::Intensity::kNone;
    blank.phase = NoiseSpec::Phase::kNone;
    blank.beam = NoiseSpec::Switch::kNone;

    if (combined.interaction != NoiseSpec::Interaction::kNone) {
        NoiseSpec s = blank;
        s.interaction = combined.interaction;
        out.push_back(s);
    }
    if (combined.doppler == NoiseSpec::Switch::kOn) {
        NoiseSpec s = blank;
        s.doppler = combined.doppler;
        out.push_back(s);
    }
    if (combined.intensity != NoiseSpec::Intensity::kNone) {
        NoiseSpec s = blank;
        s.intensity = combined.intensity;
        out.push_back(s);
    }
    if (combined.phase != NoiseSpec::Phase::kNone) {
        NoiseSpec s = blank;
        s.phase = combined.phase;
        out.push_back(s);
    }
    if (combined.beam == NoiseSpec::Switch::kOn) {
        NoiseSpec s = blank;
        s.beam = combined.beam;
        out.push_back(s);
    }
    return out;
}

std::string active_channel_name(const NoiseSpec& spec) {
    if (spec.active_channel_count() != 1)
        throw std::invalid_argument("active_channel_name: spec must have exactly one channel");
    if (spec.interaction != NoiseSpec::Interaction::kNone) return "position";
    if (spec.doppler == NoiseSpec::Switch::kOn) return "doppler";
    if (spec.intensity != NoiseSpec::Intensity::kNone) return "intensity";
    if (spec.phase != NoiseSpec::Phase::kNone) return "phase";
    return "beam";
}

namespace {

NoiseSpec merge_channels(const std::vector<NoiseSpec>& set) {
    NoiseSpec joint = set.front();
    for (const NoiseSpec& s : set) {
        if (s.interaction != NoiseSpec::Interaction::kNone) {
            joint.interaction = s.interaction;
            joint.dv_over_v = s.dv_over_v;
            joint.position_temperature = s.position_temperature;
            joint.trap_freq = s.trap_freq;
        }
        if (s.doppler == NoiseSpec::Switch::kOn) {
            joint.doppler = s.doppler;
            joint.doppler_temperature = s.doppler_temperature;
        }
        if (s.intensity != NoiseSpec::Intensity::kNone) {
            joint.intensity = s.intensity;
            joint.delta_omega = s.delta_omega;
            joint.intensity_additive = s.intensity_additive;
        }
        if (s.phase != NoiseSpec::Phase::kNone) {
            joint.phase = s.phase;
            joint.gamma0_max = s.gamma0_max;
        }
        if (s.beam == NoiseSpec::Switch::kOn) {
            joint.beam = s.beam;
            joint.waist = s.waist;
            joint.beam_sigma = s.beam_sigma;
        }
    }
    return joint;
}

}  // namespace

ErrorBudget error_budget(const GateParameters& params, const std::vector<NoiseSpec>& spec_set,
                         const PhysicalConstants& constants, int threads, int steps,
                         bool with_joint) {
    ErrorBudget budget;
    if (spec_set.empty()) throw std::invalid_argument("error_budget: empty spec set");
    for (const NoiseSpec& s : spec_set) {
        s.validate();
        if (s.active_channel_count() != 1)
            throw std::invalid_argument(
                "error_budget: each spec must have exactly one active channel");
    }
    budget.samples = spec_set.front().samples;
    budget.seed = spec_set.front().seed;

    budget.f_perfect =
        average_gate_fidelity(params, NoiseRealization::ideal(params), FidelityMode::kUhlmann,
                              steps);
    budget.decay_infidelity = 1.0 - budget.f_perfect;

    double technical_sum = 0.0;
    for (const NoiseSpec& s : spec_set) {
        BudgetRow row;
        row.source = active_channel_name(s);
        row.mc = monte_carlo_fidelity(params, s, constants, threads, steps);
        row.infidelity = budget.f_perfect - row.mc.mean;
        technical_sum += row.infidelity;
        budget.rows.push_back(row);
    }
    budget.conservative_fidelity = budget.f_perfect - technical_sum;

    if (with_joint) {
        NoiseSpec joint = merge_channels(spec_set);
        budget.joint = monte_carlo_fidelity(params, joint, constants, threads, steps);
    }
    return budget;
}

}  // namespace rydswap
