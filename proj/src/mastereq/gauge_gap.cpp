#include "tlagauge/mastereq/gauge_gap.hpp"

#include <algorithm>

namespace tlagauge {

Eigen::MatrixXcd excited_vacuum_density(const SystemModel& model)
{
    return basis_density(model.dim, product_index(model, 1, std::vector<int>(model.aux.size(), 0)));
}

GaugeGapReport gauge_gap(const SystemModel& model, const SpectralDensity& sd, const GaugeGapOptions& options)
{
    GaugeGapReport r;
    const TransitionTable table = enumerate_transitions(model);
    DissipatorOptions dopt;
    dopt.secular = options.secular;
    dopt.delta_sec = options.delta_sec;
    dopt.route = options.route;
    const Dissipator dip = build_dissipator(table, sd, DissipatorGauge::Dipole, dopt);
    const Dissipator cou = build_dissipator(table, sd, DissipatorGauge::Coulomb, dopt);
    r.transitions = table.entries.size();
    r.retained_pairs = dip.pair_count();
    r.rate_diff_max = rate_difference_max(dip, cou);
    r.rate_max = dip.rate_max();
    r.rate_gap_relative = r.rate_max > 0.0 ? r.rate_diff_max / r.rate_max : 0.0;
    r.frequency_spread = frequency_ratio_spread(dip, table);
    if (options.checkpoints.empty()) {
        return r;
    }
    const Eigen::MatrixXcd rho0 = options.rho0.size() > 0 ? options.rho0 : excited_vacuum_density(model);
    const DensityTrajectory a = evolve_density_matrix(model, table, dip, rho0, options.checkpoints, options.evolution);
    const DensityTrajectory b = evolve_density_matrix(model, table, cou, rho0, options.checkpoints, options.evolution);
    r.times = a.times;
    for (std::size_t i = 0; i < a.rhos.size(); ++i) {
        const double d = trace_distance(a.rhos[i], b.rhos[i]);
        r.trace_distance.push_back(d);
        r.trace_distance_max = std::max(r.trace_distance_max, d);
    }
    r.min_eigenvalue_dipole = *std::min_element(a.min_eigenvalue.begin(), a.min_eigenvalue.end());
    r.min_eigenvalue_coulomb = *std::min_element(b.min_eigenvalue.begin(), b.min_eigenvalue.end());
    r.warnings = a.warnings;
    r.warnings.insert(r.warnings.end(), b.warnings.begin(), b.warnings.end());
    return r;
}

} // namespace tlagauge
