#include "tlagauge/mastereq/evolution.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>

#include "tlagauge/errors.hpp"

namespace tlagauge {

namespace {

using State = std::vector<std::complex<double>>;

double min_eig(const Eigen::MatrixXcd& rho)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b)
{
    const Eigen::MatrixXcd d = a - b;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (d + d.adjoint()), Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

void validate_density_matrix(const Eigen::MatrixXcd& rho)
{
    if (rho.rows() != rho.cols() || rho.rows() == 0) {
        throw_validation("density matrix must be square and nonempty");
    }
    const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw_validation("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > 1e-10) {
        throw_validation("density matrix does not have unit trace");
    }
    if (min_eig(rho) < -1e-10) {
        throw_validation("density matrix is not positive semidefinite");
    }
}

Eigen::MatrixXcd basis_density(std::size_t dim, std::size_t index)
{
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    rho(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
    return rho;
}

DensityTrajectory evolve_density_matrix(const SystemModel& model, const TransitionTable& table,
                                        const Dissipator& dissipator, const Eigen::MatrixXcd& rho0,
                                        const std::vector<double>& checkpoints, const EvolutionOptions& options)
{
    namespace ode = boost::numeric::odeint;
    const auto n = static_cast<Eigen::Index>(model.dim);
    if (rho0.rows() != n || dissipator.dim != model.dim) {
        throw_validation("density matrix, model and dissipator dimensions differ");
    }
    validate_density_matrix(rho0);
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
        (!checkpoints.empty() && checkpoints.front() < 0.0)) {
        throw_validation("checkpoints must be nonnegative and ascending");
    }

    const Eigen::MatrixXcd& u = table.eigenvectors;
    const Eigen::VectorXd& e = table.eigenvalues;
    const Eigen::MatrixXcd rho_eig = u.adjoint() * rho0 * u;
    State state(rho_eig.data(), rho_eig.data() + rho_eig.size());

    // Interaction picture of H_S: rho = P(t) o x with P_rc = exp(-i (E_r - E_c) t).
    auto phases = [&](double t) {
        Eigen::VectorXcd ph(n);
        for (Eigen::Index r = 0; r < n; ++r) {
            ph(r) = std::polar(1.0, -e(r) * t);
        }
        return Eigen::MatrixXcd(ph * ph.adjoint());
    };

    Eigen::MatrixXcd rho_lab(n, n);
    Eigen::MatrixXcd acc(n, n);
    auto rhs = [&](const State& x, State& dxdt, double t) {
        const Eigen::Map<const Eigen::MatrixXcd> rho(x.data(), n, n);
        Eigen::Map<Eigen::MatrixXcd> out(dxdt.data(), n, n);
        const Eigen::MatrixXcd p = phases(t);
        rho_lab = p.cwiseProduct(rho);
        acc.setZero();
        dissipator.apply_add(rho_lab, acc);
        out = p.conjugate().cwiseProduct(acc);
    };

    std::vector<Eigen::MatrixXcd> top;
    for (std::size_t j = 0; j < model.aux.size(); ++j) {
        if (model.aux[j].kind == AuxKind::Oscillator) {
            top.push_back(aux_top_projector(model, static_cast<int>(j)));
        }
    }

    DensityTrajectory traj;
    auto observe = [&](const State& x, double t) {
        const Eigen::Map<const Eigen::MatrixXcd> rho_i(x.data(), n, n);
        const Eigen::MatrixXcd rho_e = phases(t).cwiseProduct(rho_i);
        Eigen::MatrixXcd rho = u * rho_e * u.adjoint();
        const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
        rho = 0.5 * (rho + rho.adjoint());
        const double drift = std::abs(rho.trace() - 1.0);
        if (drift > options.trace_tol) {
            std::ostringstream msg;
            msg << "trace drift " << drift << " at t = " << t << " exceeds " << options.trace_tol;
            throw IntegrationError(msg.str());
        }
        for (const Eigen::MatrixXcd& p : top) {
            traj.max_leakage = std::max(traj.max_leakage, (p * rho).trace().real());
        }
        traj.times.push_back(t);
        traj.trace_drift.push_back(drift);
        traj.hermiticity_defect.push_back(herm);
        traj.min_eigenvalue.push_back(min_eig(rho));
        traj.rhos.push_back(std::move(rho));
    };

    if (!checkpoints.empty()) {
        auto stepper = ode::make_dense_output(options.abs_tol, options.rel_tol, ode::runge_kutta_dopri5<State>());
        ode::integrate_times(stepper, rhs, state, checkpoints.begin(), checkpoints.end(), options.initial_dt,
                             observe);
    }
    if (!top.empty() && traj.max_leakage > options.leakage_limit) {
        std::ostringstream msg;
        msg << "oscillator top-level population " << traj.max_leakage << " exceeds " << options.leakage_limit
            << "; raise the truncation";
        traj.warnings.push_back(msg.str());
    }
    return traj;
}

} // namespace tlagauge
