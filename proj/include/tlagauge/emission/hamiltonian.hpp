// hamiltonian.hpp: dipole, naive Coulomb, corrected Coulomb and Milonni Hamiltonians

#pragma once

#include <optional>

#include "tlagauge/bath/mode_bath.hpp"
#include "tlagauge/core/physics.hpp"
#include "tlagauge/emission/fock_basis.hpp"
#include "tlagauge/emission/term_operator.hpp"

namespace tlagauge {

// Pauli matrices on the (g, e) basis; sigma_z = |e><e| - |g><g| and
// sigma_plus = |e><g|.
Atomic pauli_x();
Atomic pauli_y();
Atomic pauli_z();
Atomic sigma_plus();
Atomic sigma_minus();
Atomic excited_projector();

// Thomas-Reiche-Kuhn value d^2 omega0.
double derive_xi0(const TlaParams& params);

struct HamiltonianOptions {
    bool rwa = false;                 // drop counter-rotating terms; not for corrected Coulomb
    std::optional<double> xi0;        // naive Coulomb A^2 coefficient; TRK value when unset
    bool compensate_shift = true;     // renormalise omega0 by the finite-band level shift
};

struct GaugeHamiltonian {
    GaugeChoice gauge;
    bool rwa = false;
    int expansion_order = 0;
    double xi0 = 0.0;
    double omega0_bare = 0.0;
    double omega0_effective = 0.0; // atomic frequency actually placed on |e><e|
    double level_shift = 0.0;      // second-order shift of |e,vac> relative to |g,vac>
    TermOperator op;
};

// Throws ConfigurationError for corrected Coulomb with expansion_order >= 2 on
// a one-photon basis, an expansion order outside 1..3, RWA with corrected
// Coulomb, and ValidationError for a basis/bath mode-count mismatch.
GaugeHamiltonian assemble_hamiltonian(const FockBasis& basis, const ModeBath& bath, const TlaParams& params,
                                      const GaugeChoice& gauge, const HamiltonianOptions& options = {});

// First- plus second-order level shift of a basis state under the interaction
// op, with bare denominators from the free energies at atomic frequency omega0.
double second_order_shift(const TermOperator& op, std::size_t index, double omega0);

// Max elementwise |H - H^dag| relative to max |H|; builds the sparse matrix.
double hermiticity_defect(const TermOperator& op);

} // namespace tlagauge
