#include "tlagauge/emission/fock_basis.hpp"

#include <cmath>
#include <string>

#include "tlagauge/errors.hpp"

namespace tlagauge {

FockBasis::FockBasis(std::size_t n_modes, int max_photons) : n_modes_(n_modes), max_photons_(max_photons)
{
    if (max_photons != 1 && max_photons != 2) {
        throw_configuration("max_photons must be 1 or 2, got " + std::to_string(max_photons));
    }
    if (n_modes == 0) {
        throw_validation("Fock basis needs at least one mode");
    }
    photon_dim_ = 1 + n_modes;
    if (max_photons == 2) {
        photon_dim_ += n_modes * (n_modes + 1) / 2;
    }
}

std::size_t FockBasis::pair_index(int p, int q) const noexcept
{
    const auto n = n_modes_;
    const auto pp = static_cast<std::size_t>(p);
    const auto qq = static_cast<std::size_t>(q);
    // Pairs with first index < p occupy sum_{i<p} (n - i) slots.
    return 1 + n + pp * n - pp * (pp - 1) / 2 + (qq - pp);
}

std::size_t FockBasis::photon_index(PhotonLabel label) const
{
    const int n = static_cast<int>(n_modes_);
    switch (label.count()) {
    case 0:
        return 0;
    case 1:
        if (label.p >= n) {
            break;
        }
        return single_index(label.p);
    case 2:
        if (max_photons_ < 2 || label.p > label.q || label.q >= n) {
            break;
        }
        return pair_index(label.p, label.q);
    }
    throw_validation("photon label outside basis");
}

PhotonLabel FockBasis::photon_label(std::size_t index) const
{
    if (index >= photon_dim_) {
        throw_validation("photon index outside basis");
    }
    if (index == 0) {
        return {};
    }
    if (index <= n_modes_) {
        return {static_cast<int>(index - 1), -1};
    }
    std::size_t rest = index - 1 - n_modes_;
    std::size_t p = 0;
    while (rest >= n_modes_ - p) {
        rest -= n_modes_ - p;
        ++p;
    }
    return {static_cast<int>(p), static_cast<int>(p + rest)};
}

std::size_t FockBasis::index(BasisLabel label) const
{
    if (label.atom != 0 && label.atom != 1) {
        throw_validation("atomic label must be 0 or 1");
    }
    return static_cast<std::size_t>(label.atom) * photon_dim_ + photon_index(label.photons);
}

BasisLabel FockBasis::label(std::size_t index) const
{
    if (index >= dim()) {
        throw_validation("basis index outside basis");
    }
    const int atom = index >= photon_dim_ ? 1 : 0;
    return {atom, photon_label(index - static_cast<std::size_t>(atom) * photon_dim_)};
}

FockBasis build_basis(std::size_t n_modes, int max_photons) { return FockBasis(n_modes, max_photons); }

} // namespace tlagauge
