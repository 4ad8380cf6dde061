#include "rydswap/basis.hpp"

namespace rydswap {

std::string population_label(int idx) {
    std::string a = level_name(atom1_level(idx));
    std::string b = level_name(atom2_level(idx));
    // Single-letter levels concatenate (p_01, p_rr); alpha keeps a separator
    // so the label stays parseable (p_0_alpha, p_alpha_alpha).
    if (a.size() > 1 || b.size() > 1) return "p_" + a + "_" + b;
    return "p_" + a + b;
}

Operator basis_density(int idx) {
    Operator rho = Operator::Zero();
    rho(idx, idx) = Complex(1.0, 0.0);
    return rho;
}

double hermiticity_error(const Operator& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double trace_error(const Operator& rho) {
    return std::abs(rho.trace() - Complex(1.0, 0.0));
}

double min_eigenvalue(const Operator& rho) {
    Operator sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Operator> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace rydswap
