// checks.hpp: named verification checks with measured values and thresholds

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tlagauge/core/lineshape.hpp"
#include "tlagauge/emission/experiment.hpp"
#include "tlagauge/mastereq/gauge_gap.hpp"

namespace tlagauge {

struct CheckResult {
    int criterion = 0; // 0 for supplementary checks
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

// "PASS [3] decay-oracle: measured 2.7e-03, threshold 1.0e-02 (...)"
std::string format_check(const CheckResult& check);

struct LineshapeErrors {
    double peak = 0.0;
    double core = 0.0; // max relative error over |w - peak| <= core_halfwidth
    double band = 0.0; // max relative error over [band_lo, band_hi]
};

// Compares a normalized spectrum with the analytic lineshape centred on the
// empirical peak and renormalized over the same quadrature.
LineshapeErrors lineshape_errors(const Spectrum& normalized, LineshapeVariant variant, const TlaParams& params,
                                 double core_halfwidth, double band_lo, double band_hi);

// Max over [lo, hi] of |(a/b_shifted) / target - 1| with target = (w/w0)^exponent,
// b recentred on a's peak.
double ratio_error(const Spectrum& a, const Spectrum& b, double exponent, double omega0, double lo, double hi);

CheckResult check_analytic_ratio(const TlaParams& params, double lo, double hi, std::size_t points);
CheckResult check_markov_normalization(const TlaParams& params);
CheckResult check_decay_oracle(const EmissionResult& run, double gamma0, double tolerance = 0.01);
CheckResult check_lineshape(int criterion, const std::string& name, const Spectrum& normalized,
                            LineshapeVariant variant, const TlaParams& params);
CheckResult check_exponent(int criterion, const std::string& name, const GaugeComparison& cmp, double target,
                           double tolerance);

struct RandomModelOptions {
    std::size_t max_dim = 64;
    double coupling_scale = 0.1;
};

// Deterministic random TLA + auxiliaries model; alternates exchange and
// random-Hermitian couplings.
SystemModel random_model(std::uint64_t seed, const RandomModelOptions& options = {});

struct IdentitySample {
    std::uint64_t seed = 0;
    std::size_t dim = 0;
    bool exchange = false;
    std::size_t transitions = 0;
    double max_residual = 0.0;
    double max_c = 0.0;
};

// Parallel over models when OpenMP is available.
std::vector<IdentitySample> identity_sweep(std::size_t models, std::uint64_t seed, std::size_t max_dim = 64);
CheckResult check_coupling_identity(const std::vector<IdentitySample>& samples);
CheckResult check_coupling_identity(std::size_t models, std::uint64_t seed, std::size_t max_dim = 64);
// Secular rate equality (1e-12 relative) and trajectory agreement (1e-10) for one model.
CheckResult check_secular_report(const GaugeGapReport& report);
CheckResult check_secular_invariance(double exchange_g, std::size_t random_models, std::uint64_t seed,
                                     const SpectralDensity& sd, double t_final);
struct GapPoint {
    double splitting = 0.0; // Delta = 2 g of a resonant exchange doublet
    double rate_gap = 0.0;  // ||R - R'||_max / ||R||_max
    double frequency_spread = 0.0;
};

// Non-secular resonant-exchange sweep; parallel over points when OpenMP is available.
std::vector<GapPoint> gap_sweep(const std::vector<double>& splittings, const SpectralDensity& sd);
CheckResult check_gap_scaling(const std::vector<GapPoint>& points, double omega0);
CheckResult check_gap_scaling(const std::vector<double>& splittings, const SpectralDensity& sd);
CheckResult check_conservation(std::uint64_t seed);

// Least-squares slope and intercept of y against x.
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y);

} // namespace tlagauge
