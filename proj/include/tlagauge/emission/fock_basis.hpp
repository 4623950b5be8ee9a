// fock_basis.hpp: truncated atom x photon Fock basis (at most two photons)

#pragma once

#include <cstddef>

namespace tlagauge {

// Photon occupation with at most two quanta: vacuum (p = q = -1), a single
// photon in mode p (q = -1), or a pair p <= q.
struct PhotonLabel {
    int p = -1;
    int q = -1;

    int count() const noexcept { return p < 0 ? 0 : (q < 0 ? 1 : 2); }
    bool operator==(const PhotonLabel&) const = default;
};

struct BasisLabel {
    int atom = 0; // 0 = ground, 1 = excited
    PhotonLabel photons;

    bool operator==(const BasisLabel&) const = default;
};

// Index = atom * photon_dim + photon index. Photon states are ordered by
// photon count, then lexicographically: vac, (0), (1), ..., (0,0), (0,1), ...
class FockBasis {
public:
    // Throws ConfigurationError unless max_photons is 1 or 2 and ValidationError
    // for n_modes == 0.
    FockBasis(std::size_t n_modes, int max_photons);

    std::size_t n_modes() const noexcept { return n_modes_; }
    int max_photons() const noexcept { return max_photons_; }
    std::size_t photon_dim() const noexcept { return photon_dim_; }
    std::size_t dim() const noexcept { return 2 * photon_dim_; }

    std::size_t photon_index(PhotonLabel label) const;
    PhotonLabel photon_label(std::size_t index) const;
    std::size_t index(BasisLabel label) const;
    BasisLabel label(std::size_t index) const;

    std::size_t single_index(int k) const noexcept { return 1 + static_cast<std::size_t>(k); }
    std::size_t pair_index(int p, int q) const noexcept;

private:
    std::size_t n_modes_;
    int max_photons_;
    std::size_t photon_dim_;
};

FockBasis build_basis(std::size_t n_modes, int max_photons);

} // namespace tlagauge
