#include "tlagauge/emission/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "tlagauge/errors.hpp"

namespace tlagauge {

namespace {

const cplx I(0.0, 1.0);

// Interaction terms without the free part, added to op.
void add_interaction(TermOperator& op, const ModeBath& bath, const TlaParams& params, const GaugeChoice& gauge,
                     const HamiltonianOptions& options, double xi0)
{
    const double w0 = params.omega0();
    if (gauge.kind == GaugeKind::Dipole) {
        const int lg = op.add_ladder(coupling_for_gauge(bath, gauge, params));
        if (options.rwa) {
            op.add(-sigma_plus(), {lower(lg)});
            op.add(-sigma_minus(), {raise(lg)});
        } else {
            op.add(-pauli_x(), {lower(lg)});
            op.add(-pauli_x(), {raise(lg)});
        }
        return;
    }

    // X = d.A(0) = L + L^dag with L = sum_k a_k b_k.
    const int la = op.add_ladder(vector_potential_amplitudes(bath));
    const double s = op.ladder_norm2(la);
    const Atomic id = Atomic::Identity();
    auto add_x = [&](const Atomic& a) {
        op.add(a, {lower(la)});
        op.add(a, {raise(la)});
    };
    // sigma_y X with only the rotating parts -i sigma_plus L + i sigma_minus L^dag under RWA.
    auto add_sy_x = [&](double coef) {
        if (options.rwa) {
            op.add(coef * -I * sigma_plus(), {lower(la)});
            op.add(coef * I * sigma_minus(), {raise(la)});
        } else {
            add_x(coef * pauli_y());
        }
    };
    // Normal-ordered X^2 = L^2 + L^dag^2 + 2 L^dag L + s; RWA keeps the
    // number-conserving part.
    auto add_x2 = [&](const Atomic& a) {
        if (!options.rwa) {
            op.add(a, {lower(la), lower(la)});
            op.add(a, {raise(la), raise(la)});
        }
        op.add(2.0 * a, {raise(la), lower(la)});
        op.add(s * a, {});
    };
    // Normal-ordered X^3 = L^dag^3 + 3 L^dag^2 L + 3 L^dag L^2 + L^3 + 3 s (L + L^dag).
    auto add_x3 = [&](const Atomic& a) {
        op.add(a, {raise(la), raise(la), raise(la)});
        op.add(3.0 * a, {raise(la), raise(la), lower(la)});
        op.add(3.0 * a, {raise(la), lower(la), lower(la)});
        op.add(a, {lower(la), lower(la), lower(la)});
        add_x(3.0 * s * a);
    };

    switch (gauge.kind) {
    case GaugeKind::NaiveCoulomb:
        add_sy_x(w0);
        if (xi0 != 0.0) {
            add_x2((xi0 / (params.dipole() * params.dipole())) * id);
        }
        break;
    case GaugeKind::MilonniReplacement:
        add_sy_x(w0);
        add_x2(w0 * id);
        break;
    case GaugeKind::CorrectedCoulomb:
        // (w0/2)[(cos Phi - 1) sigma_z + sin Phi sigma_y] with Phi = 2X.
        add_x(w0 * pauli_y());
        if (gauge.expansion_order >= 2) {
            add_x2(-w0 * pauli_z());
        }
        if (gauge.expansion_order >= 3) {
            add_x3((-2.0 * w0 / 3.0) * pauli_y());
        }
        break;
    case GaugeKind::Dipole:
        break;
    }
}

} // namespace

Atomic pauli_x()
{
    Atomic m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Atomic pauli_y()
{
    Atomic m;
    m << 0.0, I, -I, 0.0;
    return m;
}

Atomic pauli_z()
{
    Atomic m;
    m << -1.0, 0.0, 0.0, 1.0;
    return m;
}

Atomic sigma_plus()
{
    Atomic m = Atomic::Zero();
    m(1, 0) = 1.0;
    return m;
}

Atomic sigma_minus()
{
    Atomic m = Atomic::Zero();
    m(0, 1) = 1.0;
    return m;
}

Atomic excited_projector()
{
    Atomic m = Atomic::Zero();
    m(1, 1) = 1.0;
    return m;
}

double derive_xi0(const TlaParams& params) { return params.dipole() * params.dipole() * params.omega0(); }

double second_order_shift(const TermOperator& op, std::size_t index, double omega0)
{
    CVec unit = CVec::Zero(static_cast<Eigen::Index>(op.dim()));
    unit(static_cast<Eigen::Index>(index)) = 1.0;
    const CVec col = op.apply(unit);
    const double e0 = op.free_energy(index, omega0);
    double shift = col(static_cast<Eigen::Index>(index)).real();
    for (Eigen::Index m = 0; m < col.size(); ++m) {
        if (m == static_cast<Eigen::Index>(index) || col(m) == 0.0) {
            continue;
        }
        const double denom = e0 - op.free_energy(static_cast<std::size_t>(m), omega0);
        if (std::abs(denom) < 1e-12) {
            continue;
        }
        shift += std::norm(col(m)) / denom;
    }
    return shift;
}

GaugeHamiltonian assemble_hamiltonian(const FockBasis& basis, const ModeBath& bath, const TlaParams& params,
                                      const GaugeChoice& gauge, const HamiltonianOptions& options)
{
    if (basis.n_modes() != bath.size()) {
        throw_validation("basis has " + std::to_string(basis.n_modes()) + " modes but bath has " +
                         std::to_string(bath.size()));
    }
    if (options.rwa && gauge.kind == GaugeKind::CorrectedCoulomb) {
        throw_configuration("rwa is not defined for the corrected Coulomb gauge");
    }
    if (gauge.kind == GaugeKind::CorrectedCoulomb) {
        if (gauge.expansion_order < 1 || gauge.expansion_order > 3) {
            throw_configuration("corrected-coulomb expansion_order must be 1, 2 or 3");
        }
        if (gauge.expansion_order >= 2 && basis.max_photons() < 2) {
            throw_configuration("corrected-coulomb expansion_order >= 2 requires max_photons = 2");
        }
    }

    const double w0 = params.omega0();
    const double xi0 = gauge.kind == GaugeKind::NaiveCoulomb ? options.xi0.value_or(derive_xi0(params)) : 0.0;

    TermOperator interaction(basis, bath.omegas);
    add_interaction(interaction, bath, params, gauge, options, xi0);
    double shift = 0.0;
    if (options.compensate_shift) {
        const std::size_t e_vac = basis.index({1, {}});
        const std::size_t g_vac = basis.index({0, {}});
        shift = second_order_shift(interaction, e_vac, w0) - second_order_shift(interaction, g_vac, w0);
    }

    TermOperator op = interaction;
    op.add(Atomic::Identity(), {field_energy()});
    op.add((w0 - shift) * excited_projector(), {});

    return GaugeHamiltonian{gauge,
                            options.rwa,
                            gauge.kind == GaugeKind::CorrectedCoulomb ? gauge.expansion_order : 0,
                            xi0,
                            w0,
                            w0 - shift,
                            shift,
                            std::move(op)};
}

double hermiticity_defect(const TermOperator& op)
{
    const CSparse h = op.to_sparse();
    const CSparse ht = h.adjoint();
    const CSparse diff = h - ht;
    double scale = 0.0;
    for (Eigen::Index r = 0; r < h.outerSize(); ++r) {
        for (CSparse::InnerIterator it(h, r); it; ++it) {
            scale = std::max(scale, std::abs(it.value()));
        }
    }
    double worst = 0.0;
    for (Eigen::Index r = 0; r < diff.outerSize(); ++r) {
        for (CSparse::InnerIterator it(diff, r); it; ++it) {
            worst = std::max(worst, std::abs(it.value()));
        }
    }
    return scale > 0.0 ? worst / scale : worst;
}

} // namespace tlagauge
