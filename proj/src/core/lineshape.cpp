#include "tlagauge/core/lineshape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "tlagauge/errors.hpp"

namespace tlagauge {

namespace {

double prefactor(LineshapeVariant variant, double x)
{
    switch (variant) {
    case LineshapeVariant::SPh:
        return x * x * x;
    case LineshapeVariant::SPhPrime:
        return x;
    case LineshapeVariant::S0Lorentzian:
        return 1.0;
    }
    return 1.0;
}

double lorentz_denominator(const LineshapeModel& model, double omega)
{
    const double gamma = model.params.gamma0();
    const double detuning = omega - model.center.value_or(model.params.omega0());
    return 0.25 * gamma * gamma + detuning * detuning;
}

double amplitude(const LineshapeModel& model)
{
    return model.variant == LineshapeVariant::S0Lorentzian ? 1.0 : model.params.gamma0() / (2.0 * kPi);
}

} // namespace

double eval_lineshape(const LineshapeModel& model, double omega)
{
    if (!(omega > 0.0)) {
        throw_domain("lineshape evaluated at nonpositive frequency");
    }
    const double x = omega / model.params.omega0();
    return amplitude(model) * prefactor(model.variant, x) / lorentz_denominator(model, omega);
}

double eval_lineshape_markov(const LineshapeModel& model, double omega)
{
    return amplitude(model) / lorentz_denominator(model, omega);
}

double integrate_markov_lineshape(const LineshapeModel& model, double lo, double hi)
{
    using boost::math::quadrature::gauss_kronrod;
    auto f = [&](double w) { return eval_lineshape_markov(model, w); };
    double error = 0.0;
    // Split at the centre so the peak sits on an interval endpoint.
    const double c = std::clamp(model.center.value_or(model.params.omega0()), lo, hi);
    return gauss_kronrod<double, 61>::integrate(f, lo, c, 15, 1e-13, &error) +
           gauss_kronrod<double, 61>::integrate(f, c, hi, 15, 1e-13, &error);
}

} // namespace tlagauge
