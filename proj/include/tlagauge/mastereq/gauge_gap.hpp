// gauge_gap.hpp: dipole versus Coulomb dissipative dynamics on one model

#pragma once

#include <vector>

#include "tlagauge/mastereq/evolution.hpp"

namespace tlagauge {

struct GaugeGapOptions {
    bool secular = true;
    double delta_sec = -1.0;
    std::vector<double> checkpoints;  // empty: rates only, no evolution
    Eigen::MatrixXcd rho0;            // empty: |e> (x) aux ground
    EvolutionOptions evolution;
    CoulombRoute route = CoulombRoute::Reduced;
};

struct GaugeGapReport {
    double rate_diff_max = 0.0;      // max |R - R'|
    double rate_max = 0.0;           // max |R|
    double rate_gap_relative = 0.0;  // rate_diff_max / rate_max
    double frequency_spread = 0.0;   // max |w_a' / w_a - 1| over retained pairs
    double trace_distance_max = 0.0;
    std::vector<double> times;
    std::vector<double> trace_distance;
    double min_eigenvalue_dipole = 0.0;
    double min_eigenvalue_coulomb = 0.0;
    std::size_t transitions = 0;
    std::size_t retained_pairs = 0;
    std::vector<std::string> warnings;
};

GaugeGapReport gauge_gap(const SystemModel& model, const SpectralDensity& sd, const GaugeGapOptions& options = {});

// Excited TLA with every aux mode in its ground level.
Eigen::MatrixXcd excited_vacuum_density(const SystemModel& model);

} // namespace tlagauge
