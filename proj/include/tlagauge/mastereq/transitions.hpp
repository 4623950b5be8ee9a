// transitions.hpp: eigenstate transition table of the system Hamiltonian

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "tlagauge/mastereq/system_model.hpp"

namespace tlagauge {

struct Transition {
    int j = 0; // lower eigenstate
    int k = 0; // upper eigenstate
    double omega = 0.0;
    std::complex<double> c;  // <j| sigma_x |k>
    std::complex<double> cp; // <j| S |k>, S = sigma_y + (i/omega0)[sigma_x, V]
};

struct TransitionTable {
    double omega0 = 1.0;
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors; // columns in the product basis, largest component real positive
    std::vector<Transition> entries; // sorted by omega
    std::size_t excluded_degenerate = 0; // pairs closer than the degeneracy floor
    double degeneracy_floor = 0.0;
};

// floor_fraction * omega0 is the degeneracy floor.
TransitionTable enumerate_transitions(const SystemModel& model, double floor_fraction = 1e-9);

// The operator S = sigma_y + (i / omega0)[sigma_x, V] in the product basis.
Eigen::MatrixXcd coupling_operator(const SystemModel& model);

struct IdentityReport {
    std::vector<double> residuals; // |c'_a - i (w_a / w0) c_a|
    double max_residual = 0.0;
    double max_c = 0.0;
    bool pass = false; // max_residual < 1e-9 * max_c (or both zero)
};

IdentityReport verify_coupling_identity(const TransitionTable& table);

} // namespace tlagauge
