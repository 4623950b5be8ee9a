#include "tlagauge/emission/oracle.hpp"

#include <cmath>
#include <sstream>

namespace tlagauge {

WwOracle::WwOracle(const TlaParams& params, const ModeBath& bath) : params_(params), omegas_(bath.omegas)
{
    const double ratio = params.gamma0() / params.omega0();
    if (ratio > 0.1) {
        std::ostringstream msg;
        msg << "Gamma0/omega0 = " << ratio << " exceeds 0.1; the pole approximation is unreliable";
        warnings_.push_back(msg.str());
    }
}

std::complex<double> WwOracle::amplitude(double t) const
{
    return std::exp(std::complex<double>(-0.5 * params_.gamma0() * t, -params_.omega0() * t));
}

double WwOracle::survival(double t) const { return std::exp(-params_.gamma0() * t); }

double WwOracle::spectrum(double omega, GaugeKind gauge) const
{
    const LineshapeModel model{gauge == GaugeKind::Dipole ? LineshapeVariant::SPh : LineshapeVariant::SPhPrime,
                               params_, std::nullopt};
    return eval_lineshape(model, omega);
}

std::vector<double> WwOracle::spectrum_on_grid(GaugeKind gauge) const
{
    std::vector<double> out;
    out.reserve(omegas_.size());
    for (double w : omegas_) {
        out.push_back(spectrum(w, gauge));
    }
    return out;
}

} // namespace tlagauge
