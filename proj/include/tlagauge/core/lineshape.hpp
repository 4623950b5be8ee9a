// lineshape.hpp: analytic natural-lineshape formulas for a decaying two-level atom

#pragma once

#include <optional>

#include "tlagauge/core/physics.hpp"

namespace tlagauge {

enum class LineshapeVariant {
    SPh,          // (Gamma0/2pi) (w/w0)^3 / (Gamma0^2/4 + (w-w0)^2)
    SPhPrime,     // (w/w0)^3 replaced by w/w0
    S0Lorentzian, // 1 / (Gamma0^2/4 + (w-w0)^2)
};

struct LineshapeModel {
    LineshapeVariant variant = LineshapeVariant::SPh;
    TlaParams params;
    // Centre of the Lorentzian denominator; omega0 when unset. The (w/w0)^n
    // prefactor always refers to omega0.
    std::optional<double> center = std::nullopt;
};

// Throws DomainError for omega <= 0.
double eval_lineshape(const LineshapeModel& model, double omega);

// Same formula with the (w/w0)^n prefactor frozen to one (Markov window).
double eval_lineshape_markov(const LineshapeModel& model, double omega);

// Integral of the Markov-window lineshape over [lo, hi] by adaptive
// Gauss-Kronrod quadrature; hi may be +infinity.
double integrate_markov_lineshape(const LineshapeModel& model, double lo, double hi);

} // namespace tlagauge
