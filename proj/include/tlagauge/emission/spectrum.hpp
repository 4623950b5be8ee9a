// spectrum.hpp: photon-number spectra from final states and gauge comparison

#pragma once

#include <optional>
#include <vector>

#include "tlagauge/bath/mode_bath.hpp"
#include "tlagauge/emission/fock_basis.hpp"
#include "tlagauge/emission/term_operator.hpp"

namespace tlagauge {

struct Spectrum {
    std::vector<double> omegas;
    std::vector<double> weights;
    std::vector<double> density;          // (n_k - n_k^baseline) / weight_k, scaled by 1/normalization once normalized
    std::vector<double> density_baseline; // n_k^baseline / weight_k, same scaling
    bool baseline_subtracted = false;
    bool normalized = false;
    double normalization = 1.0;           // band integral divided out by normalize()
    double min_density = 0.0;
    bool negative_flag = false;           // some density < -1e-12 (before normalization)

    double integral() const;
};

// Mean photon number <b_k^dag b_k> of every mode; doubly occupied modes count 2.
std::vector<double> mode_populations(const CVec& psi, const FockBasis& basis);

Spectrum extract_spectrum(const CVec& psi_final, const ModeBath& bath, const FockBasis& basis,
                          const std::optional<CVec>& baseline = std::nullopt);

// Divides by the band integral; ValidationError when the integral is not positive.
Spectrum normalize(Spectrum s);

// Peak frequency from a parabola through 1/density at the three samples
// around the maximum.
double estimate_peak(const std::vector<double>& omegas, const std::vector<double>& density);

struct ComparisonOptions {
    double fit_lo = 0.7;
    double fit_hi = 1.3;
    double omega0 = 1.0;
    double core_halfwidth = 0.0; // samples with |omega - peak| < core_halfwidth are left out of the fit
    bool recenter = true;        // shift b so its peak lands on a's peak
};

struct GaugeComparison {
    std::vector<double> omegas;
    std::vector<double> ratio; // a / b after recentering
    double exponent = 0.0;     // slope of log(a/b) against log(omega/omega0)
    double intercept = 0.0;
    double peak_a = 0.0;
    double peak_b = 0.0;
    std::size_t fit_points = 0;
};

// Throws ValidationError for mismatched grids or fewer than 2 fit points.
GaugeComparison gauge_comparison(const Spectrum& a, const Spectrum& b, const ComparisonOptions& options = {});

// Linear interpolation of log(density) evaluated at shifted frequencies.
std::vector<double> shift_spectrum(const std::vector<double>& omegas, const std::vector<double>& density,
                                   double shift);

} // namespace tlagauge
