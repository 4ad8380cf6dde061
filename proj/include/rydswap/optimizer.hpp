#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rydswap/fidelity.hpp"

namespace rydswap {

enum class PulseFamily { kTriangle, kGaussian, kComposite };

PulseFamily pulse_family_from_string(const std::string& name);
std::string to_string(PulseFamily family);

struct ParamBound {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
};

// Search domain of the pulse-parameter optimization. The genome covers the
// pulse coefficients, delta1 and q (plus t_gate when optimize_t_gate is set);
// delta2 is always derived from V = delta1 + delta2 + q.
struct SearchSpace {
    PulseFamily family = PulseFamily::kGaussian;
    std::vector<ParamBound> bounds;   // genome order; see default_bounds()
    bool optimize_t_gate = false;
    double rabi_cap = 0.0;            // rad/us; candidates above it score 0
    double v0 = 0.0;                  // rad/us
    double gamma = kTwoPi / 400.0;    // rad/us
    BranchingRatios branching;
    double t_gate = 1.0;              // us, used when t_gate is not optimized

    // Genome layout for a family: triangle {omega1_max, omega2_max},
    // gaussian {omega1_max, omega2_max, width1, width2},
    // composite {p1_c0, p1_c1, p1_c2, p2_c0, p2_c1, p2_c2},
    // each followed by {delta1, q} and, optionally, {t_gate}.
    static std::vector<ParamBound> default_bounds(PulseFamily family, bool optimize_t_gate);

    void validate() const;
    GateParameters decode(const std::vector<double>& genome) const;
};

struct GaOptions {
    int population = 64;
    int generations = 200;
    double crossover_rate = 0.9;
    double mutation_rate = 0.15;
    int elitism = 2;
    std::uint64_t seed = 0;
    int search_steps = 1000;     // coarse integrator used during the search
    int verify_steps = 0;        // 0 = default_steps; final best re-verified here
    int stagnation_limit = 30;   // stop after this many non-improving generations
    int threads = 0;

    void validate() const;
};

struct OptResult {
    GateParameters best;
    std::vector<double> best_genome;
    double best_fitness = 0.0;        // re-verified at verify_steps
    std::vector<double> history;      // per-generation best (search fitness)
    std::vector<double> mean_history; // per-generation population mean
    long evaluations = 0;
    std::uint64_t seed = 0;
};

// Perfect-case objective: average gate fidelity with no noise and full
// Lindblad decay. Cap violations and integration failures score 0.
double objective_perfect_fidelity(const GateParameters& candidate, double rabi_cap,
                                  int steps = 1000);

// Real-coded GA: tournament selection (size 3), blend crossover, Gaussian
// mutation with sigma = 5% of each bound width decaying by 0.98 per
// generation, elitism keeping the best candidates. Deterministic given the
// seed.
OptResult ga_optimize(const SearchSpace& space, const GaOptions& options);

}  // namespace rydswap
