// spectral_density.hpp: reservoir coupling strength Gamma(omega) at zero temperature

#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace tlagauge {

// Gamma0 (omega / omega0)^3: the free-space dipole-gauge form.
struct FreeSpaceCubic {};

// Gamma0 (omega / omega0)^exponent.
struct PowerLaw {
    double exponent = 0.0;
};

// Linear interpolation through (omega, rate) samples, zero outside the table.
struct Tabulated {
    std::vector<std::pair<double, double>> samples;
};

using SpectralKind = std::variant<FreeSpaceCubic, PowerLaw, Tabulated>;

class SpectralDensity {
public:
    // reference_frequency is omega0; reference_rate is Gamma0. Tabulated
    // tables must be nonempty with strictly increasing frequencies and
    // nonnegative rates (ValidationError otherwise).
    SpectralDensity(SpectralKind kind, double reference_frequency, double reference_rate);

    static SpectralDensity free_space(double omega0, double gamma0)
    {
        return SpectralDensity(FreeSpaceCubic{}, omega0, gamma0);
    }

    // Zero for omega <= 0.
    double operator()(double omega) const;

    const SpectralKind& kind() const noexcept { return kind_; }
    double reference_frequency() const noexcept { return reference_frequency_; }
    double reference_rate() const noexcept { return reference_rate_; }

private:
    SpectralKind kind_;
    double reference_frequency_;
    double reference_rate_;
};

inline double eval_spectral_density(const SpectralDensity& sd, double omega) { return sd(omega); }

} // namespace tlagauge
