// propagator.hpp: Krylov (Lanczos) propagation of psi(t) = exp(-iHt) psi0

#pragma once

#include <vector>

#include "tlagauge/emission/term_operator.hpp"

namespace tlagauge {

struct PropagatorOptions {
    double tol = 1e-10;    // local error per unit time
    int krylov_dim = 30;
    double max_step = 0.0; // 0 = unlimited
};

struct Trajectory {
    std::vector<double> times;
    std::vector<CVec> states;
    std::vector<double> norm_drift; // | ||psi(t)|| - ||psi0|| | at each checkpoint
    std::size_t steps = 0;
    std::size_t matvecs = 0;
};

// Returns psi at each checkpoint (ascending, >= 0). Each step picks the
// largest time step whose a-posteriori Lanczos error estimate stays below
// tol * step. Throws PropagationError when the norm drifts by more than
// 100 * tol * t.
Trajectory propagate(const TermOperator& h, const CVec& psi0, const std::vector<double>& checkpoints,
                     const PropagatorOptions& options = {});

// exp(-i H t) psi for a single time.
CVec propagate_to(const TermOperator& h, const CVec& psi0, double t, const PropagatorOptions& options = {});

} // namespace tlagauge
