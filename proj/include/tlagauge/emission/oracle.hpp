// oracle.hpp: Wigner-Weisskopf (pole approximation) reference solution

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tlagauge/bath/mode_bath.hpp"
#include "tlagauge/core/lineshape.hpp"

namespace tlagauge {

class WwOracle {
public:
    // Records a warning when Gamma0 / omega0 > 0.1.
    WwOracle(const TlaParams& params, const ModeBath& bath);

    // c_e(t) = exp(-i omega0 t - Gamma0 t / 2).
    std::complex<double> amplitude(double t) const;
    double survival(double t) const;

    // S_ph for the dipole gauge, S'_ph for the Coulomb variants.
    double spectrum(double omega, GaugeKind gauge) const;
    // Same, sampled on the bath grid.
    std::vector<double> spectrum_on_grid(GaugeKind gauge) const;

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    TlaParams params_;
    std::vector<double> omegas_;
    std::vector<std::string> warnings_;
};

inline WwOracle ww_oracle(const TlaParams& params, const ModeBath& bath) { return WwOracle(params, bath); }

} // namespace tlagauge
