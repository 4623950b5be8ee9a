#include "tlagauge/bath/mode_bath.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/legendre.hpp>

#include "tlagauge/errors.hpp"

namespace tlagauge {

namespace {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], ascending.
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights)
{
    const auto order = static_cast<unsigned>(n);
    const std::vector<double> positive = boost::math::legendre_p_zeros<double>(static_cast<int>(order));
    nodes.clear();
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
        if (*it != 0.0) {
            nodes.push_back(-*it);
        }
    }
    for (double x : positive) {
        nodes.push_back(x);
    }
    weights.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double x = nodes[i];
        const double dp = boost::math::legendre_p_prime<double>(static_cast<int>(order), x);
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

} // namespace

double ModeBath::recurrence_time() const
{
    if (weights.empty()) {
        return 0.0;
    }
    return 2.0 * kPi / *std::max_element(weights.begin(), weights.end());
}

ModeBath discretize(const SpectralDensity& sd, Band band, std::size_t n_modes, QuadratureRule rule)
{
    if (n_modes < 2) {
        throw_validation("bath needs at least 2 modes");
    }
    if (!(band.lo > 0.0) || !std::isfinite(band.hi)) {
        throw_validation("bath band must lie in omega > 0");
    }
    if (!(band.hi > band.lo)) {
        throw_validation("bath band upper edge must exceed lower edge");
    }
    ModeBath bath;
    bath.band = band;
    bath.rule = rule;
    const double width = band.hi - band.lo;
    if (rule == QuadratureRule::UniformGrid) {
        const double h = width / static_cast<double>(n_modes);
        for (std::size_t k = 0; k < n_modes; ++k) {
            bath.omegas.push_back(band.lo + (static_cast<double>(k) + 0.5) * h);
            bath.weights.push_back(h);
        }
    } else {
        std::vector<double> x;
        std::vector<double> w;
        gauss_legendre(n_modes, x, w);
        const double mid = 0.5 * (band.lo + band.hi);
        for (std::size_t k = 0; k < x.size(); ++k) {
            bath.omegas.push_back(mid + 0.5 * width * x[k]);
            bath.weights.push_back(0.5 * width * w[k]);
        }
    }
    bath.g_dipole.reserve(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        bath.g_dipole.push_back(std::sqrt(sd(bath.omegas[k]) * bath.weights[k] / (2.0 * kPi)));
    }
    return bath;
}

std::string to_string(GaugeKind kind)
{
    switch (kind) {
    case GaugeKind::Dipole:
        return "dipole";
    case GaugeKind::NaiveCoulomb:
        return "naive-coulomb";
    case GaugeKind::CorrectedCoulomb:
        return "corrected-coulomb";
    case GaugeKind::MilonniReplacement:
        return "milonni";
    }
    return "unknown";
}

GaugeKind parse_gauge_kind(const std::string& name)
{
    for (GaugeKind kind : {GaugeKind::Dipole, GaugeKind::NaiveCoulomb, GaugeKind::CorrectedCoulomb,
                           GaugeKind::MilonniReplacement}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw_validation("unknown gauge '" + name + "'");
}

std::vector<double> coupling_for_gauge(const ModeBath& bath, const GaugeChoice& gauge, const TlaParams& params)
{
    std::vector<double> out = bath.g_dipole;
    if (gauge.is_coulomb()) {
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] *= params.omega0() / bath.omegas[k];
        }
    }
    return out;
}

std::vector<double> vector_potential_amplitudes(const ModeBath& bath)
{
    std::vector<double> out(bath.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = bath.g_dipole[k] / bath.omegas[k];
    }
    return out;
}

} // namespace tlagauge
