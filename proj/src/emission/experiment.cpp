#include "tlagauge/emission/experiment.hpp"

#include <algorithm>
#include <sstream>

#include "tlagauge/errors.hpp"

namespace tlagauge {

std::string to_string(InitialState s)
{
    switch (s) {
    case InitialState::Auto:
        return "auto";
    case InitialState::Bare:
        return "bare";
    case InitialState::Dressed:
        return "dressed";
    }
    return "auto";
}

InitialState parse_initial_state(const std::string& name)
{
    for (InitialState s : {InitialState::Auto, InitialState::Bare, InitialState::Dressed}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw_validation("unknown initial state '" + name + "'");
}

CVec dressed_state(const FockBasis& basis, const ModeBath& bath, int atom, const PropagatorOptions& options)
{
    TermOperator generator(basis, bath.omegas);
    const int la = generator.add_ladder(vector_potential_amplitudes(bath));
    // exp(-i K) with K = -X sigma_x.
    generator.add(-pauli_x(), {lower(la)});
    generator.add(-pauli_x(), {raise(la)});
    CVec psi = CVec::Zero(static_cast<Eigen::Index>(basis.dim()));
    psi(static_cast<Eigen::Index>(basis.index({atom, {}}))) = 1.0;
    return propagate_to(generator, psi, 1.0, options);
}

EmissionResult run_emission(const EmissionSetup& setup)
{
    EmissionResult out;
    const FockBasis basis(setup.bath.size(), setup.max_photons);
    const GaugeHamiltonian h = assemble_hamiltonian(basis, setup.bath, setup.params, setup.gauge, setup.hamiltonian);
    const double gamma0 = setup.params.gamma0();
    out.t_final = setup.t_final > 0.0 ? setup.t_final : 16.0 / gamma0;
    out.dim = basis.dim();
    out.omega0_effective = h.omega0_effective;
    out.level_shift = h.level_shift;

    if (out.t_final < 8.0 / gamma0) {
        out.warnings.push_back("t_final below 8/Gamma0: residual excitation biases the wings");
    }
    if (out.t_final > setup.bath.recurrence_time()) {
        std::ostringstream msg;
        msg << "t_final " << out.t_final << " exceeds the bath recurrence time " << setup.bath.recurrence_time();
        out.warnings.push_back(msg.str());
    }

    out.initial_state = setup.initial_state;
    if (out.initial_state == InitialState::Auto) {
        out.initial_state =
            setup.gauge.kind == GaugeKind::CorrectedCoulomb ? InitialState::Dressed : InitialState::Bare;
    }
    CVec excited;
    CVec ground;
    if (out.initial_state == InitialState::Dressed) {
        excited = dressed_state(basis, setup.bath, 1, setup.propagator);
        ground = dressed_state(basis, setup.bath, 0, setup.propagator);
    } else {
        excited = CVec::Zero(static_cast<Eigen::Index>(basis.dim()));
        ground = excited;
        excited(static_cast<Eigen::Index>(basis.index({1, {}}))) = 1.0;
        ground(static_cast<Eigen::Index>(basis.index({0, {}}))) = 1.0;
    }

    std::vector<double> checkpoints = setup.survival_times;
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::remove_if(checkpoints.begin(), checkpoints.end(),
                                     [&](double t) { return t < 0.0 || t >= out.t_final; }),
                      checkpoints.end());
    checkpoints.push_back(out.t_final);

    const Trajectory traj = propagate(h.op, excited, checkpoints, setup.propagator);
    out.matvecs += traj.matvecs;
    const auto e_vac = static_cast<Eigen::Index>(basis.index({1, {}}));
    for (std::size_t i = 0; i + 1 < traj.times.size(); ++i) {
        out.survival_times.push_back(traj.times[i]);
        out.survival.push_back(std::norm(traj.states[i](e_vac)));
    }
    for (double d : traj.norm_drift) {
        out.max_norm_drift = std::max(out.max_norm_drift, d);
    }
    const CVec& final_state = traj.states.back();
    const auto d = static_cast<Eigen::Index>(basis.photon_dim());
    out.residual_excitation = final_state.tail(d).squaredNorm();

    std::optional<CVec> baseline;
    if (setup.subtract_baseline) {
        const Trajectory base = propagate(h.op, ground, {out.t_final}, setup.propagator);
        out.matvecs += base.matvecs;
        out.max_norm_drift = std::max(out.max_norm_drift, base.norm_drift.back());
        baseline = base.states.back();
    }
    out.raw = extract_spectrum(final_state, setup.bath, basis, baseline);
    if (out.raw.negative_flag) {
        std::ostringstream msg;
        msg << "baseline subtraction left negative density (min " << out.raw.min_density << ")";
        out.warnings.push_back(msg.str());
    }
    out.normalized = normalize(out.raw);
    return out;
}

} // namespace tlagauge
