// evolution.hpp: density-matrix integration of d(rho)/dt = -i[H_S, rho] + L rho

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tlagauge/mastereq/dissipator.hpp"
#include "tlagauge/mastereq/system_model.hpp"
#include "tlagauge/mastereq/transitions.hpp"

namespace tlagauge {

struct EvolutionOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    double initial_dt = 1e-2;
    double trace_tol = 1e-8;      // drift beyond this throws IntegrationError
    double leakage_limit = 1e-6;  // top-level oscillator population that triggers a warning
};

struct DensityTrajectory {
    std::vector<double> times;
    std::vector<Eigen::MatrixXcd> rhos; // product basis, Hermitian part
    std::vector<double> trace_drift;
    std::vector<double> hermiticity_defect;
    std::vector<double> min_eigenvalue;
    double max_leakage = 0.0;
    std::vector<std::string> warnings;
};

// rho0 in the product basis; checkpoints ascending and nonnegative. The
// dissipator must come from enumerate_transitions(model).
DensityTrajectory evolve_density_matrix(const SystemModel& model, const TransitionTable& table,
                                        const Dissipator& dissipator, const Eigen::MatrixXcd& rho0,
                                        const std::vector<double>& checkpoints,
                                        const EvolutionOptions& options = {});

// 1/2 sum |eig(a - b)|.
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Validates Hermitian, unit trace and positive semidefinite (to -1e-10).
void validate_density_matrix(const Eigen::MatrixXcd& rho);

// |psi><psi| for a product-basis basis state.
Eigen::MatrixXcd basis_density(std::size_t dim, std::size_t index);

} // namespace tlagauge
