// physics.hpp: two-level-atom parameters in natural units (hbar = eps0 = c = 1)

#pragma once

namespace tlagauge {

inline constexpr double kPi = 3.14159265358979323846;

// Free-space decay rate d^2 omega0^3 / (3 pi). Throws DomainError for
// omega0 <= 0 or d < 0.
double derive_gamma0(double omega0, double dipole);

// Two-level atom: transition frequency and dipole matrix element. The decay
// rate is always derived, never stored.
class TlaParams {
public:
    TlaParams(double omega0, double dipole);

    // Inverts derive_gamma0 for the dipole magnitude.
    static TlaParams from_decay_rate(double omega0, double gamma0);

    double omega0() const noexcept { return omega0_; }
    double dipole() const noexcept { return dipole_; }
    double gamma0() const { return derive_gamma0(omega0_, dipole_); }

private:
    double omega0_;
    double dipole_;
};

} // namespace tlagauge
