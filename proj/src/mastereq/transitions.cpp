#include "tlagauge/mastereq/transitions.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace tlagauge {

namespace {

Eigen::Matrix2cd sx()
{
    Eigen::Matrix2cd m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Eigen::Matrix2cd sy()
{
    const std::complex<double> i(0.0, 1.0);
    Eigen::Matrix2cd m;
    m << 0.0, i, -i, 0.0;
    return m;
}

} // namespace

Eigen::MatrixXcd coupling_operator(const SystemModel& model)
{
    const std::complex<double> i(0.0, 1.0);
    const Eigen::MatrixXcd x = tla_operator(model, sx());
    return tla_operator(model, sy()) + (i / model.tla.omega0()) * (x * model.v - model.v * x);
}

TransitionTable enumerate_transitions(const SystemModel& model, double floor_fraction)
{
    TransitionTable t;
    t.omega0 = model.tla.omega0();
    t.degeneracy_floor = floor_fraction * t.omega0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(model.hs);
    t.eigenvalues = es.eigenvalues();
    t.eigenvectors = es.eigenvectors();
    // Fix the phase of each eigenvector: largest component real and positive.
    for (Eigen::Index col = 0; col < t.eigenvectors.cols(); ++col) {
        Eigen::Index arg = 0;
        t.eigenvectors.col(col).cwiseAbs().maxCoeff(&arg);
        const std::complex<double> z = t.eigenvectors(arg, col);
        t.eigenvectors.col(col) *= std::conj(z) / std::abs(z);
    }
    const Eigen::MatrixXcd& u = t.eigenvectors;
    const Eigen::MatrixXcd cx = u.adjoint() * tla_operator(model, sx()) * u;
    const Eigen::MatrixXcd cs = u.adjoint() * coupling_operator(model) * u;
    const auto n = t.eigenvalues.size();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = j + 1; k < n; ++k) {
            const double w = t.eigenvalues(k) - t.eigenvalues(j);
            if (w <= t.degeneracy_floor) {
                ++t.excluded_degenerate;
                continue;
            }
            t.entries.push_back({static_cast<int>(j), static_cast<int>(k), w, cx(j, k), cs(j, k)});
        }
    }
    std::stable_sort(t.entries.begin(), t.entries.end(),
                     [](const Transition& a, const Transition& b) { return a.omega < b.omega; });
    return t;
}

IdentityReport verify_coupling_identity(const TransitionTable& table)
{
    const std::complex<double> i(0.0, 1.0);
    IdentityReport r;
    r.residuals.reserve(table.entries.size());
    for (const Transition& e : table.entries) {
        const double res = std::abs(e.cp - i * (e.omega / table.omega0) * e.c);
        r.residuals.push_back(res);
        r.max_residual = std::max(r.max_residual, res);
        r.max_c = std::max(r.max_c, std::abs(e.c));
    }
    r.pass = r.max_residual < 1e-9 * r.max_c || (r.max_residual == 0.0 && r.max_c == 0.0);
    return r;
}

} // namespace tlagauge
