#include "tlagauge/emission/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "tlagauge/errors.hpp"

namespace tlagauge {

double Spectrum::integral() const
{
    double s = 0.0;
    for (std::size_t k = 0; k < density.size(); ++k) {
        s += density[k] * weights[k];
    }
    return s;
}

std::vector<double> mode_populations(const CVec& psi, const FockBasis& basis)
{
    if (psi.size() != static_cast<Eigen::Index>(basis.dim())) {
        throw_validation("state dimension does not match basis");
    }
    std::vector<double> n(basis.n_modes(), 0.0);
    const std::size_t d = basis.photon_dim();
    for (std::size_t i = 1; i < d; ++i) {
        const double prob = std::norm(psi(static_cast<Eigen::Index>(i))) + std::norm(psi(static_cast<Eigen::Index>(i + d)));
        const PhotonLabel l = basis.photon_label(i);
        n[static_cast<std::size_t>(l.p)] += prob;
        if (l.q >= 0) {
            n[static_cast<std::size_t>(l.q)] += prob;
        }
    }
    return n;
}

Spectrum extract_spectrum(const CVec& psi_final, const ModeBath& bath, const FockBasis& basis,
                          const std::optional<CVec>& baseline)
{
    if (bath.size() != basis.n_modes()) {
        throw_validation("bath and basis mode counts differ");
    }
    Spectrum s;
    s.omegas = bath.omegas;
    s.weights = bath.weights;
    const std::vector<double> n = mode_populations(psi_final, basis);
    std::vector<double> nb(n.size(), 0.0);
    if (baseline) {
        nb = mode_populations(*baseline, basis);
        s.baseline_subtracted = true;
    }
    s.density.resize(n.size());
    s.density_baseline.resize(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) {
        s.density[k] = (n[k] - nb[k]) / bath.weights[k];
        s.density_baseline[k] = nb[k] / bath.weights[k];
    }
    s.min_density = *std::min_element(s.density.begin(), s.density.end());
    s.negative_flag = s.min_density < -1e-12;
    return s;
}

Spectrum normalize(Spectrum s)
{
    const double total = s.integral();
    if (!(total > 0.0)) {
        throw_validation("spectrum integral is not positive; cannot normalize");
    }
    for (std::size_t k = 0; k < s.density.size(); ++k) {
        s.density[k] /= total;
        s.density_baseline[k] /= total;
    }
    s.min_density /= total;
    s.normalization = total;
    s.normalized = true;
    return s;
}

double estimate_peak(const std::vector<double>& omegas, const std::vector<double>& density)
{
    if (omegas.size() != density.size() || omegas.size() < 3) {
        throw_validation("peak estimate needs at least 3 samples");
    }
    const auto it = std::max_element(density.begin(), density.end());
    std::size_t i = static_cast<std::size_t>(it - density.begin());
    i = std::clamp<std::size_t>(i, 1, omegas.size() - 2);
    const double x0 = omegas[i - 1], x1 = omegas[i], x2 = omegas[i + 1];
    if (!(density[i - 1] > 0.0 && density[i] > 0.0 && density[i + 1] > 0.0)) {
        return x1;
    }
    const double y0 = 1.0 / density[i - 1], y1 = 1.0 / density[i], y2 = 1.0 / density[i + 1];
    // Vertex of the interpolating parabola through (x_j, y_j).
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double a = (d12 - d01) / (x2 - x0);
    if (!(a > 0.0)) {
        return x1;
    }
    const double b = d01 - a * (x0 + x1);
    return std::clamp(-b / (2.0 * a), x0, x2);
}

std::vector<double> shift_spectrum(const std::vector<double>& omegas, const std::vector<double>& density,
                                   double shift)
{
    std::vector<double> logd(density.size());
    for (std::size_t k = 0; k < density.size(); ++k) {
        logd[k] = std::log(std::max(density[k], 1e-300));
    }
    std::vector<double> out(omegas.size());
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        const double x = omegas[k] + shift;
        auto hi = std::lower_bound(omegas.begin(), omegas.end(), x);
        std::size_t j = static_cast<std::size_t>(hi - omegas.begin());
        j = std::clamp<std::size_t>(j, 1, omegas.size() - 1);
        const double frac = (x - omegas[j - 1]) / (omegas[j] - omegas[j - 1]);
        out[k] = std::exp(logd[j - 1] + frac * (logd[j] - logd[j - 1]));
    }
    return out;
}

GaugeComparison gauge_comparison(const Spectrum& a, const Spectrum& b, const ComparisonOptions& options)
{
    if (a.omegas.size() != b.omegas.size()) {
        throw_validation("gauge comparison needs spectra on the same frequency grid");
    }
    for (std::size_t k = 0; k < a.omegas.size(); ++k) {
        if (std::abs(a.omegas[k] - b.omegas[k]) > 1e-12 * std::max(1.0, std::abs(a.omegas[k]))) {
            throw_validation("gauge comparison needs spectra on the same frequency grid");
        }
    }
    GaugeComparison out;
    out.omegas = a.omegas;
    out.peak_a = estimate_peak(a.omegas, a.density);
    out.peak_b = estimate_peak(b.omegas, b.density);
    std::vector<double> bd = b.density;
    if (options.recenter && out.peak_a != out.peak_b) {
        bd = shift_spectrum(b.omegas, b.density, out.peak_b - out.peak_a);
    }
    out.ratio.resize(a.omegas.size());
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t k = 0; k < a.omegas.size(); ++k) {
        out.ratio[k] = a.density[k] / bd[k];
        const double w = a.omegas[k];
        if (w < options.fit_lo || w > options.fit_hi || std::abs(w - out.peak_a) < options.core_halfwidth) {
            continue;
        }
        if (!(out.ratio[k] > 0.0) || !std::isfinite(out.ratio[k])) {
            continue;
        }
        xs.push_back(std::log(w / options.omega0));
        ys.push_back(std::log(out.ratio[k]));
    }
    if (xs.size() < 2) {
        throw_validation("gauge comparison fit window holds fewer than 2 usable samples");
    }
    Eigen::MatrixXd design(static_cast<Eigen::Index>(xs.size()), 2);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        design(static_cast<Eigen::Index>(i), 0) = xs[i];
        design(static_cast<Eigen::Index>(i), 1) = 1.0;
        rhs(static_cast<Eigen::Index>(i)) = ys[i];
    }
    const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
    out.exponent = coef(0);
    out.intercept = coef(1);
    out.fit_points = xs.size();
    return out;
}

} // namespace tlagauge
