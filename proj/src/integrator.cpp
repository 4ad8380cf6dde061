#include "rydswap/integrator.hpp"

#include <cmath>

namespace rydswap {

namespace {

constexpr double kTraceTolerance = 1e-6;
constexpr double kEigTolerance = -1e-6;
constexpr int kEigCheckInterval = 500;

// Fixed-sparsity Hamiltonian application plus a structured dissipator. The
// decay and dephasing channels reduce to an elementwise damping mask and six
// block feeds, which keeps the right-hand side at a single 16x16 product.
class LindbladStepper {
public:
    LindbladStepper(const GateParameters& params, const NoiseRealization& realization,
                    bool static_frame)
        : params_(params), realization_(realization), static_frame_(static_frame) {
        h_.setZero();
        if (static_frame_) {
            double d1 = params_.delta1;
            double d2 = params_.delta2();
            const double energy[kLevels] = {0.0, d1 - d2, d1, 0.0};
            for (int i = 0; i < kDim; ++i)
                h_(i, i) = energy[atom1_level(i)] + energy[atom2_level(i)];
        }
        h_(kIdxRR, kIdxRR) += realization_.v_realized;

        // Damping mask: -gamma/2 (n_r(i) + n_r(j)) from the decay channels,
        // -1/2 sum_ch (d_i - d_j)^2 from the diagonal dephasing channels.
        double gamma0 = realization_.gamma0_realized;
        for (int i = 0; i < kDim; ++i) {
            for (int j = 0; j < kDim; ++j) {
                double nr_i = (atom1_level(i) == kLevelR) + (atom2_level(i) == kLevelR);
                double nr_j = (atom1_level(j) == kLevelR) + (atom2_level(j) == kLevelR);
                double damp = -0.5 * params_.gamma * (nr_i + nr_j);
                if (gamma0 > 0.0) {
                    for (int g : {kLevel0, kLevel1}) {
                        for (int atom = 0; atom < 2; ++atom) {
                            auto f = [&](int idx) {
                                int level = atom == 0 ? atom1_level(idx) : atom2_level(idx);
                                return (level == kLevelR ? 1.0 : 0.0) -
                                       (level == g ? 1.0 : 0.0);
                            };
                            double diff = f(i) - f(j);
                            damp += -0.25 * gamma0 * diff * diff;
                        }
                    }
                }
                damp_[static_cast<std::size_t>(i * kDim + j)] = damp;
            }
        }

        feed_[0] = params_.branching.eta_r0 * params_.gamma;
        feed_[1] = params_.branching.eta_r1 * params_.gamma;
        feed_[2] = params_.branching.eta_alpha * params_.gamma;
    }

    void rhs(double t, const Operator& rho, Operator& out) {
        update_h(t);
        a_.noalias() = h_ * rho;
        out = Complex(0.0, -1.0) * (a_ - a_.adjoint());

        const Complex* src = rho.data();
        Complex* dst = out.data();
        for (int n = 0; n < kDim * kDim; ++n) dst[n] += damp_[static_cast<std::size_t>(n)] * src[n];

        static constexpr int targets[3] = {kLevel0, kLevel1, kLevelAlpha};
        for (int c = 0; c < 3; ++c) {
            double s = feed_[c];
            if (s == 0.0) continue;
            int g = targets[c];
            out.block<4, 4>(4 * g, 4 * g) += s * rho.block<4, 4>(4 * kLevelR, 4 * kLevelR);
            for (int k = 0; k < kLevels; ++k)
                for (int kp = 0; kp < kLevels; ++kp)
                    out(4 * k + g, 4 * kp + g) += s * rho(4 * k + kLevelR, 4 * kp + kLevelR);
        }
    }

private:
    void update_h(double t) {
        double o1 = rabi(params_.pulse1, t, params_.t_gate) + realization_.omega_offset1;
        double o2 = rabi(params_.pulse2, t, params_.t_gate) + realization_.omega_offset2;
        Complex e1(1.0, 0.0), e2(1.0, 0.0);
        if (!static_frame_) {
            e1 = std::polar(1.0, -(params_.delta1 + realization_.alpha1) * t);
            e2 = std::polar(1.0, -(params_.delta2() + realization_.alpha2) * t);
        }
        Complex a1_atom1 = o1 * realization_.drive_scale1() * e1;
        Complex a2_atom1 = o2 * realization_.drive_scale1() * e2;
        Complex a1_atom2 = o1 * realization_.drive_scale2() * e1;
        Complex a2_atom2 = o2 * realization_.drive_scale2() * e2;
        for (int k = 0; k < kLevels; ++k) {
            set_pair(pair_index(kLevelR, k), pair_index(kLevel0, k), a1_atom1);
            set_pair(pair_index(kLevelR, k), pair_index(kLevel1, k), a2_atom1);
            set_pair(pair_index(k, kLevelR), pair_index(k, kLevel0), a1_atom2);
            set_pair(pair_index(k, kLevelR), pair_index(k, kLevel1), a2_atom2);
        }
    }

    void set_pair(int i, int j, Complex v) {
        h_(i, j) = v;
        h_(j, i) = std::conj(v);
    }

    const GateParameters& params_;
    const NoiseRealization& realization_;
    bool static_frame_;
    Operator h_;
    Operator a_;
    std::array<double, kDim * kDim> damp_{};
    std::array<double, 3> feed_{};
};

Trajectory run_evolution(const Operator& rho0, const GateParameters& params,
                         const NoiseRealization& realization, int steps, bool static_frame) {
    params.validate();
    if (steps == 0) steps = default_steps(params.t_gate);
    if (steps < 1000) throw std::invalid_argument("evolve: steps must be at least 1000");
    if (trace_error(rho0) > 1e-8 || hermiticity_error(rho0) > 1e-10 ||
        min_eigenvalue(rho0) < -1e-8)
        throw std::invalid_argument("evolve: initial state is not a density matrix");

    LindbladStepper stepper(params, realization, static_frame);

    Trajectory traj;
    traj.times.resize(static_cast<std::size_t>(steps) + 1);
    traj.populations.resize(static_cast<std::size_t>(steps) + 1);

    Operator rho = rho0;
    Operator k1, k2, k3, k4, tmp;
    double h = params.t_gate / steps;

    auto record = [&](int step) {
        traj.times[static_cast<std::size_t>(step)] = step == steps ? params.t_gate : h * step;
        auto& row = traj.populations[static_cast<std::size_t>(step)];
        for (int i = 0; i < kDim; ++i) row[static_cast<std::size_t>(i)] = rho(i, i).real();
    };
    record(0);

    for (int step = 0; step < steps; ++step) {
        double t = h * step;
        stepper.rhs(t, rho, k1);
        tmp = rho + (0.5 * h) * k1;
        stepper.rhs(t + 0.5 * h, tmp, k2);
        tmp = rho + (0.5 * h) * k2;
        stepper.rhs(t + 0.5 * h, tmp, k3);
        tmp = rho + h * k3;
        double t_next = step + 1 == steps ? params.t_gate : t + h;
        stepper.rhs(t_next, tmp, k4);
        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rho = 0.5 * (rho + rho.adjoint()).eval();

        if (trace_error(rho) > kTraceTolerance)
            throw IntegrationError("trace drift beyond 1e-6", step);
        bool check_eig = (step + 1) % kEigCheckInterval == 0 || step + 1 == steps;
        if (check_eig && min_eigenvalue(rho) < kEigTolerance)
            throw IntegrationError("negative eigenvalue beyond -1e-6", step);
        record(step + 1);
    }

    traj.rho_final = rho;
    return traj;
}

}  // namespace

Operator lindblad_rhs(const Operator& rho, const Operator& h,
                      const std::vector<Operator>& channels) {
    Operator out = Complex(0.0, -1.0) * (h * rho - rho * h);
    for (const Operator& l : channels) {
        Operator ldag_l = l.adjoint() * l;
        out += l * rho * l.adjoint() - 0.5 * (ldag_l * rho + rho * ldag_l);
    }
    return out;
}

int default_steps(double t_gate) {
    double proposed = std::ceil(4000.0 * t_gate);
    return std::max(1000, static_cast<int>(proposed));
}

Trajectory evolve(const Operator& rho0, const GateParameters& params,
                  const NoiseRealization& realization, int steps) {
    return run_evolution(rho0, params, realization, steps, false);
}

Trajectory evolve_static_frame(const Operator& rho0, const GateParameters& params,
                               const NoiseRealization& realization, int steps) {
    if (realization.has_doppler())
        throw std::invalid_argument(
            "evolve_static_frame: Doppler offsets are not representable in the static frame");
    return run_evolution(rho0, params, realization, steps, true);
}

double simpson_uniform(const std::vector<double>& samples, double dt) {
    std::size_t n = samples.size();
    if (n < 2) return 0.0;
    std::size_t intervals = n - 1;
    if (intervals == 1) return 0.5 * dt * (samples[0] + samples[1]);

    double total = 0.0;
    std::size_t simpson_end = intervals;  // index one past the 1/3-rule range
    if (intervals % 2 != 0) {
        if (intervals < 3) return 0.5 * dt * (samples[0] + samples[1]);
        simpson_end = intervals - 3;
        // Simpson 3/8 on the last three intervals
        total += 3.0 * dt / 8.0 *
                 (samples[intervals - 3] + 3.0 * samples[intervals - 2] +
                  3.0 * samples[intervals - 1] + samples[intervals]);
    }
    if (simpson_end >= 2) {
        double acc = samples[0] + samples[simpson_end];
        for (std::size_t i = 1; i < simpson_end; ++i)
            acc += samples[i] * (i % 2 == 0 ? 2.0 : 4.0);
        total += dt / 3.0 * acc;
    }
    return total;
}

double time_in_state(const Trajectory& traj, int basis_index) {
    if (traj.times.empty()) throw std::invalid_argument("time_in_state: empty trajectory");
    if (basis_index < 0 || basis_index >= kDim)
        throw std::invalid_argument("time_in_state: basis index out of range");
    std::vector<double> column(traj.populations.size());
    for (std::size_t i = 0; i < column.size(); ++i)
        column[i] = traj.populations[i][static_cast<std::size_t>(basis_index)];
    return simpson_uniform(column, traj.dt());
}

}  // namespace rydswap
