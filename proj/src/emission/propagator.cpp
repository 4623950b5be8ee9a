#include "tlagauge/emission/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "tlagauge/errors.hpp"

namespace tlagauge {

namespace {

struct Krylov {
    std::vector<CVec> basis;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    double beta_next = 0.0; // beta_m; zero after a happy breakdown
    double norm = 0.0;
};

Krylov build_krylov(const TermOperator& h, const CVec& psi, int max_dim, std::size_t& matvecs)
{
    Krylov k;
    k.norm = psi.norm();
    std::vector<double> alpha;
    std::vector<double> beta;
    k.basis.push_back(psi / k.norm);
    CVec w;
    for (int j = 0; j < max_dim; ++j) {
        h.apply(k.basis[static_cast<std::size_t>(j)], w);
        ++matvecs;
        alpha.push_back(k.basis[static_cast<std::size_t>(j)].dot(w).real());
        // Full reorthogonalisation, twice.
        for (int pass = 0; pass < 2; ++pass) {
            for (const CVec& v : k.basis) {
                w -= v * v.dot(w);
            }
        }
        const double b = w.norm();
        const double scale = std::abs(alpha.back()) + (beta.empty() ? 0.0 : beta.back()) + 1e-300;
        if (b < 1e-13 * scale) {
            k.beta_next = 0.0;
            break;
        }
        if (j + 1 == max_dim) {
            k.beta_next = b;
            break;
        }
        beta.push_back(b);
        k.basis.push_back(w / b);
    }
    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        t(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < m) {
            t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    k.eigenvalues = es.eigenvalues();
    k.eigenvectors = es.eigenvectors();
    return k;
}

// Coefficients of exp(-i T dt) e1 in the Krylov basis.
Eigen::VectorXcd krylov_coefficients(const Krylov& k, double dt)
{
    const Eigen::VectorXd first = k.eigenvectors.row(0).transpose();
    Eigen::VectorXcd phase(first.size());
    for (Eigen::Index i = 0; i < first.size(); ++i) {
        phase(i) = std::exp(cplx(0.0, -k.eigenvalues(i) * dt)) * first(i);
    }
    return k.eigenvectors.cast<cplx>() * phase;
}

double error_estimate(const Krylov& k, double dt)
{
    if (k.beta_next == 0.0) {
        return 0.0;
    }
    const Eigen::VectorXcd c = krylov_coefficients(k, dt);
    return k.norm * k.beta_next * std::abs(c(c.size() - 1));
}

} // namespace

Trajectory propagate(const TermOperator& h, const CVec& psi0, const std::vector<double>& checkpoints,
                     const PropagatorOptions& options)
{
    if (!(options.tol > 0.0)) {
        throw_validation("propagator tolerance must be positive");
    }
    if (psi0.size() != static_cast<Eigen::Index>(h.dim())) {
        throw_validation("initial state dimension does not match Hamiltonian");
    }
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
        (!checkpoints.empty() && checkpoints.front() < 0.0)) {
        throw_validation("checkpoints must be nonnegative and ascending");
    }
    Trajectory out;
    const double norm0 = psi0.norm();
    CVec psi = psi0;
    double t = 0.0;
    double dt_guess = 1.0;
    for (double target : checkpoints) {
        while (target - t > 1e-14 * std::max(1.0, target)) {
            const Krylov k = build_krylov(h, psi, options.krylov_dim, out.matvecs);
            double dt = std::min(target - t, 2.0 * dt_guess);
            if (options.max_step > 0.0) {
                dt = std::min(dt, options.max_step);
            }
            while (error_estimate(k, dt) > options.tol * dt) {
                dt *= 0.5;
                if (dt < 1e-12) {
                    throw PropagationError("Krylov step size underflow at t = " + std::to_string(t));
                }
            }
            const Eigen::VectorXcd c = krylov_coefficients(k, dt);
            CVec next = CVec::Zero(psi.size());
            for (Eigen::Index i = 0; i < c.size(); ++i) {
                next += (k.norm * c(i)) * k.basis[static_cast<std::size_t>(i)];
            }
            psi.swap(next);
            t = (target - t - dt) <= 1e-14 * std::max(1.0, target) ? target : t + dt;
            dt_guess = dt;
            ++out.steps;
        }
        const double drift = std::abs(psi.norm() - norm0);
        if (drift > 100.0 * options.tol * std::max(1.0, target)) {
            std::ostringstream msg;
            msg << "norm drift " << drift << " at t = " << target << " exceeds 100 * tol * t (tol = " << options.tol
                << ", " << out.steps << " steps, " << out.matvecs << " matvecs)";
            throw PropagationError(msg.str());
        }
        out.times.push_back(target);
        out.states.push_back(psi);
        out.norm_drift.push_back(drift);
    }
    return out;
}

CVec propagate_to(const TermOperator& h, const CVec& psi0, double t, const PropagatorOptions& options)
{
    return propagate(h, psi0, {t}, options).states.front();
}

} // namespace tlagauge
