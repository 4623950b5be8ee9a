// mode_bath.hpp: finite-mode discretization of the free-space photon continuum

#pragma once

#include <string>
#include <vector>

#include "tlagauge/core/physics.hpp"
#include "tlagauge/core/spectral_density.hpp"

namespace tlagauge {

enum class QuadratureRule { UniformGrid, GaussLegendre };

struct Band {
    double lo = 0.5;
    double hi = 1.5;
};

// Each mode k carries frequency omega_k, width weight_k and dipole-gauge
// coupling g_k with g_k^2 = Gamma(omega_k) weight_k / (2 pi).
struct ModeBath {
    std::vector<double> omegas;
    std::vector<double> weights;
    std::vector<double> g_dipole;
    Band band;
    QuadratureRule rule = QuadratureRule::UniformGrid;

    std::size_t size() const noexcept { return omegas.size(); }
    // Recurrence time 2 pi / min weight; evolutions longer than this see
    // revivals from the discrete spectrum.
    double recurrence_time() const;
};

// Throws ValidationError for n_modes < 2 or a band not inside (0, inf).
ModeBath discretize(const SpectralDensity& sd, Band band, std::size_t n_modes, QuadratureRule rule);

enum class GaugeKind { Dipole, NaiveCoulomb, CorrectedCoulomb, MilonniReplacement };

struct GaugeChoice {
    GaugeKind kind = GaugeKind::Dipole;
    int expansion_order = 2; // CorrectedCoulomb only

    static GaugeChoice dipole() { return {GaugeKind::Dipole, 0}; }
    static GaugeChoice naive_coulomb() { return {GaugeKind::NaiveCoulomb, 0}; }
    static GaugeChoice corrected_coulomb(int order = 2) { return {GaugeKind::CorrectedCoulomb, order}; }
    static GaugeChoice milonni() { return {GaugeKind::MilonniReplacement, 0}; }

    bool is_coulomb() const noexcept { return kind != GaugeKind::Dipole; }
};

std::string to_string(GaugeKind kind);
GaugeKind parse_gauge_kind(const std::string& name);

// First-order coupling amplitude per mode: g_k in the dipole gauge,
// (omega0 / omega_k) g_k in every Coulomb variant.
std::vector<double> coupling_for_gauge(const ModeBath& bath, const GaugeChoice& gauge, const TlaParams& params);

// Per-mode amplitude a_k = g_k / omega_k of d.A(0) = sum_k a_k (b_k + b_k^dag).
std::vector<double> vector_potential_amplitudes(const ModeBath& bath);

} // namespace tlagauge
