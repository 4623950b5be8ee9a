#include "tlagauge/core/physics.hpp"

#include <cmath>
#include <string>

#include "tlagauge/errors.hpp"

namespace tlagauge {

double derive_gamma0(double omega0, double dipole)
{
    if (!(omega0 > 0.0)) {
        throw_domain("omega0 must be positive, got " + std::to_string(omega0));
    }
    if (!(dipole >= 0.0)) {
        throw_domain("dipole must be nonnegative, got " + std::to_string(dipole));
    }
    return dipole * dipole * omega0 * omega0 * omega0 / (3.0 * kPi);
}

TlaParams::TlaParams(double omega0, double dipole) : omega0_(omega0), dipole_(dipole)
{
    if (!(omega0 > 0.0)) {
        throw_domain("TlaParams: omega0 must be positive");
    }
    if (!(dipole > 0.0)) {
        throw_domain("TlaParams: dipole must be positive");
    }
}

TlaParams TlaParams::from_decay_rate(double omega0, double gamma0)
{
    if (!(omega0 > 0.0)) {
        throw_domain("TlaParams: omega0 must be positive");
    }
    if (!(gamma0 > 0.0)) {
        throw_domain("TlaParams: gamma0 must be positive");
    }
    return TlaParams(omega0, std::sqrt(3.0 * kPi * gamma0 / (omega0 * omega0 * omega0)));
}

} // namespace tlagauge
