#include "rydswap/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rydswap/parallel.hpp"
#include "rydswap/rng.hpp"

namespace rydswap {

PulseFamily pulse_family_from_string(const std::string& name) {
    if (name == "triangle") return PulseFamily::kTriangle;
    if (name == "gaussian") return PulseFamily::kGaussian;
    if (name == "composite") return PulseFamily::kComposite;
    throw std::invalid_argument("unknown pulse family: " + name);
}

std::string to_string(PulseFamily family) {
    switch (family) {
        case PulseFamily::kTriangle: return "triangle";
        case PulseFamily::kGaussian: return "gaussian";
        case PulseFamily::kComposite: return "composite";
    }
    return "?";
}

std::vector<ParamBound> SearchSpace::default_bounds(PulseFamily family, bool optimize_t_gate) {
    std::vector<ParamBound> bounds;
    auto freq = [](const std::string& name, double lo_mhz, double hi_mhz) {
        return ParamBound{name, mhz_to_rad_us(lo_mhz), mhz_to_rad_us(hi_mhz)};
    };
    switch (family) {
        case PulseFamily::kTriangle:
            bounds = {freq("omega1_max", 0.0, 10.0), freq("omega2_max", 0.0, 12.0)};
            break;
        case PulseFamily::kGaussian:
            bounds = {freq("omega1_max", 0.0, 10.0), freq("omega2_max", 0.0, 10.0),
                      ParamBound{"width1", 0.05, 1.0}, ParamBound{"width2", 0.05, 1.0}};
            break;
        case PulseFamily::kComposite:
            bounds = {freq("p1_c0", -5.0, 5.0), freq("p1_c1", -5.0, 5.0),
                      freq("p1_c2", -5.0, 5.0), freq("p2_c0", -5.0, 5.0),
                      freq("p2_c1", -5.0, 5.0), freq("p2_c2", -5.0, 5.0)};
            break;
    }
    bounds.push_back(freq("delta1", 10.0, 40.0));
    bounds.push_back(freq("q", 0.0, 10.0));
    if (optimize_t_gate) bounds.push_back(ParamBound{"t_gate", 0.05, 1.2});
    return bounds;
}

void SearchSpace::validate() const {
    std::size_t pulse_params = 0;
    switch (family) {
        case PulseFamily::kTriangle: pulse_params = 2; break;
        case PulseFamily::kGaussian: pulse_params = 4; break;
        case PulseFamily::kComposite: pulse_params = 6; break;
    }
    std::size_t expected = pulse_params + 2 + (optimize_t_gate ? 1 : 0);
    if (bounds.size() != expected)
        throw std::invalid_argument("SearchSpace: bound count does not match the genome layout");
    for (const ParamBound& b : bounds) {
        if (!(b.lo <= b.hi) || !std::isfinite(b.lo) || !std::isfinite(b.hi))
            throw std::invalid_argument("SearchSpace: bound " + b.name + " is not a finite interval");
    }
    if (rabi_cap < 0.0) throw std::invalid_argument("SearchSpace: rabi_cap must be non-negative");
    if (!optimize_t_gate && t_gate <= 0.0)
        throw std::invalid_argument("SearchSpace: fixed t_gate must be positive");
    branching.validate();
}

GateParameters SearchSpace::decode(const std::vector<double>& genome) const {
    if (genome.size() != bounds.size())
        throw std::invalid_argument("SearchSpace: genome length mismatch");
    GateParameters p;
    std::size_t i = 0;
    switch (family) {
        case PulseFamily::kTriangle:
            p.pulse1 = TrianglePulse{genome[i]};
            p.pulse2 = TrianglePulse{genome[i + 1]};
            i += 2;
            break;
        case PulseFamily::kGaussian:
            p.pulse1 = GaussianPulse{genome[i], genome[i + 2]};
            p.pulse2 = GaussianPulse{genome[i + 1], genome[i + 3]};
            i += 4;
            break;
        case PulseFamily::kComposite:
            p.pulse1 = CompositePulse{genome[i], genome[i + 1], genome[i + 2]};
            p.pulse2 = CompositePulse{genome[i + 3], genome[i + 4], genome[i + 5]};
            i += 6;
            break;
    }
    p.delta1 = genome[i++];
    p.q = genome[i++];
    p.t_gate = optimize_t_gate ? genome[i++] : t_gate;
    p.v0 = v0;
    p.gamma = gamma;
    p.branching = branching;
    return p;
}

void GaOptions::validate() const {
    if (population < 8) throw std::invalid_argument("GaOptions: population must be at least 8");
    if (generations < 1) throw std::invalid_argument("GaOptions: generations must be positive");
    if (crossover_rate < 0.0 || crossover_rate > 1.0 || mutation_rate < 0.0 || mutation_rate > 1.0)
        throw std::invalid_argument("GaOptions: rates must lie in [0,1]");
    if (elitism < 0 || elitism >= population)
        throw std::invalid_argument("GaOptions: elitism must lie in [0, population)");
    if (search_steps < 1000) throw std::invalid_argument("GaOptions: search_steps below 1000");
}

double objective_perfect_fidelity(const GateParameters& candidate, double rabi_cap, int steps) {
    if (rabi_cap > 0.0) {
        double peak = std::max(max_abs_rabi(candidate.pulse1, candidate.t_gate),
                               max_abs_rabi(candidate.pulse2, candidate.t_gate));
        if (peak > rabi_cap) return 0.0;
    }
    try {
        return average_gate_fidelity(candidate, NoiseRealization::ideal(candidate),
                                     FidelityMode::kUhlmann, steps);
    } catch (const IntegrationError&) {
        return 0.0;
    } catch (const std::invalid_argument&) {
        return 0.0;
    }
}

OptResult ga_optimize(const SearchSpace& space, const GaOptions& options) {
    space.validate();
    options.validate();

    const std::size_t genes = space.bounds.size();
    const std::size_t pop_size = static_cast<std::size_t>(options.population);
    Rng rng(mix_seed(options.seed, 0x6741u));

    auto clip = [&](double x, std::size_t g) {
        return std::clamp(x, space.bounds[g].lo, space.bounds[g].hi);
    };

    std::vector<std::vector<double>> population(pop_size, std::vector<double>(genes));
    for (auto& genome : population)
        for (std::size_t g = 0; g < genes; ++g)
            genome[g] = rng.uniform(space.bounds[g].lo, space.bounds[g].hi);

    std::vector<double> fitness(pop_size, 0.0);
    auto evaluate = [&](long& counter) {
        parallel_for(pop_size, options.threads, [&](std::size_t i) {
            fitness[i] = objective_perfect_fidelity(space.decode(population[i]), space.rabi_cap,
                                                    options.search_steps);
        });
        counter += static_cast<long>(pop_size);
    };

    OptResult result;
    result.seed = options.seed;
    double best_fit = -1.0;
    std::vector<double> best_genome;
    int stagnant = 0;

    for (int gen = 0; gen < options.generations; ++gen) {
        evaluate(result.evaluations);

        std::vector<std::size_t> order(pop_size);
        for (std::size_t i = 0; i < pop_size; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fitness[a] > fitness[b]; });

        if (fitness[order[0]] > best_fit + 1e-9) {
            stagnant = 0;
        } else {
            ++stagnant;
        }
        if (fitness[order[0]] > best_fit) {
            best_fit = fitness[order[0]];
            best_genome = population[order[0]];
        }
        double mean = 0.0;
        for (double f : fitness) mean += f;
        result.history.push_back(best_fit);
        result.mean_history.push_back(mean / static_cast<double>(pop_size));

        if (stagnant >= options.stagnation_limit || gen + 1 == options.generations) break;

        double sigma_scale = 0.05 * std::pow(0.98, gen);
        std::vector<std::vector<double>> next;
        next.reserve(pop_size);
        for (int e = 0; e < options.elitism; ++e)
            next.push_back(population[order[static_cast<std::size_t>(e)]]);

        auto tournament = [&]() -> const std::vector<double>& {
            std::size_t best = rng.index(pop_size);
            for (int k = 1; k < 3; ++k) {
                std::size_t challenger = rng.index(pop_size);
                if (fitness[challenger] > fitness[best]) best = challenger;
            }
            return population[best];
        };

        while (next.size() < pop_size) {
            const std::vector<double>& a = tournament();
            const std::vector<double>& b = tournament();
            std::vector<double> child(genes);
            if (rng.uniform() < options.crossover_rate) {
                // blend crossover, alpha = 0.5
                for (std::size_t g = 0; g < genes; ++g) {
                    double lo = std::min(a[g], b[g]);
                    double hi = std::max(a[g], b[g]);
                    double d = hi - lo;
                    child[g] = clip(rng.uniform(lo - 0.5 * d, hi + 0.5 * d), g);
                }
            } else {
                child = a;
            }
            for (std::size_t g = 0; g < genes; ++g) {
                if (rng.uniform() < options.mutation_rate) {
                    double sigma = sigma_scale * (space.bounds[g].hi - space.bounds[g].lo);
                    child[g] = clip(child[g] + rng.normal(0.0, sigma), g);
                }
            }
            next.push_back(std::move(child));
        }
        population = std::move(next);
    }

    result.best_genome = best_genome;
    result.best = space.decode(best_genome);
    result.best_fitness = objective_perfect_fidelity(
        result.best, space.rabi_cap,
        options.verify_steps == 0 ? default_steps(result.best.t_gate) : options.verify_steps);
    return result;
}

}  // namespace rydswap
