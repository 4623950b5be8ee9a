// experiment.hpp: end-to-end spontaneous-emission run for one gauge

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlagauge/bath/mode_bath.hpp"
#include "tlagauge/emission/hamiltonian.hpp"
#include "tlagauge/emission/propagator.hpp"
#include "tlagauge/emission/spectrum.hpp"

namespace tlagauge {

enum class InitialState {
    Auto,    // Dressed for corrected Coulomb, Bare otherwise
    Bare,    // |e,vac> (baseline |g,vac>)
    Dressed, // exp(i Phi sigma_x / 2) |e,vac>, the bare excitation seen from the corrected Coulomb frame
};

std::string to_string(InitialState s);
InitialState parse_initial_state(const std::string& name);

struct EmissionSetup {
    TlaParams params = TlaParams::from_decay_rate(1.0, 0.02);
    ModeBath bath;
    GaugeChoice gauge;
    int max_photons = 1;
    HamiltonianOptions hamiltonian;
    InitialState initial_state = InitialState::Auto;
    double t_final = 0.0; // 16 / Gamma0 when zero
    std::vector<double> survival_times;
    bool subtract_baseline = true;
    PropagatorOptions propagator;
};

struct EmissionResult {
    Spectrum raw;        // baseline-subtracted, not normalized
    Spectrum normalized;
    std::vector<double> survival_times;
    std::vector<double> survival; // |<e,vac|psi(t)>|^2
    double t_final = 0.0;
    double omega0_effective = 0.0;
    double level_shift = 0.0;
    double max_norm_drift = 0.0;
    double residual_excitation = 0.0; // excited-atom population at t_final
    std::size_t dim = 0;
    std::size_t matvecs = 0;
    InitialState initial_state = InitialState::Bare;
    std::vector<std::string> warnings;
};

// Vector exp(i X sigma_x) applied to |atom, vac>, X = d.A(0).
CVec dressed_state(const FockBasis& basis, const ModeBath& bath, int atom, const PropagatorOptions& options = {});

EmissionResult run_emission(const EmissionSetup& setup);

} // namespace tlagauge
