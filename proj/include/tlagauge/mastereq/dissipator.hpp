// dissipator.hpp: Born-Markov rate dissipators in the system eigenbasis

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tlagauge/core/spectral_density.hpp"
#include "tlagauge/mastereq/transitions.hpp"

namespace tlagauge {

enum class DissipatorGauge { Dipole, Coulomb };

// How the Coulomb rates are formed: Reduced uses Gamma(w_a) (w_a'/w_a) c_a c_a'^*,
// CouplingOperator uses Gamma(w_a) (w0/w_a)^2 c'_a c'_a'^* directly.
enum class CoulombRoute { Reduced, CouplingOperator };

std::string to_string(DissipatorGauge g);

struct JumpEntry {
    int alpha = 0; // index into the transition table
    int j = 0;
    int k = 0;
    std::complex<double> value;
};

// Within a channel R_{a a'} = x_a conj(y_a'); sigma_a = |j><k|.
struct Channel {
    std::vector<JumpEntry> x;
    std::vector<JumpEntry> y;
};

struct Dissipator {
    DissipatorGauge gauge = DissipatorGauge::Dipole;
    bool secular = true;
    double delta_sec = 0.0;
    std::size_t dim = 0;
    std::vector<Channel> channels;

    // rho -> 1/2 sum R_{a a'} ([sigma_a rho, sigma_a'^dag] + h.c.), rho in the eigenbasis.
    Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;
    void apply_add(const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) const;

    // Max |R_{a a'}| over retained pairs.
    double rate_max() const;
    // Smallest eigenvalue of the Hermitian part of each channel's rate matrix.
    double min_rate_eigenvalue() const;
    // Number of retained (a, a') pairs.
    std::size_t pair_count() const;
};

struct DissipatorOptions {
    bool secular = true;
    double delta_sec = -1.0; // negative: the table's degeneracy floor
    CoulombRoute route = CoulombRoute::Reduced;
};

Dissipator build_dissipator(const TransitionTable& table, const SpectralDensity& sd, DissipatorGauge gauge,
                            const DissipatorOptions& options = {});

// Secular grouping: single-linkage clusters of sorted transition frequencies,
// neighbours closer than delta_sec sharing a cluster. Returns cluster id per entry.
std::vector<int> secular_clusters(const TransitionTable& table, double delta_sec);

// Max |R_{a a'} - R'_{a a'}| over the union of retained pairs. Both
// dissipators must come from the same table with the same grouping.
double rate_difference_max(const Dissipator& a, const Dissipator& b);

// Max |w_a' / w_a - 1| over retained pairs with nonzero c on both sides.
double frequency_ratio_spread(const Dissipator& d, const TransitionTable& table, double c_floor = 1e-12);

} // namespace tlagauge
