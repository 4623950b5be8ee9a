// term_operator.hpp: matrix-free atom x photon operator built from ladder strings

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "tlagauge/emission/fock_basis.hpp"

namespace tlagauge {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CSparse = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;
using Atomic = Eigen::Matrix2cd;

enum class FactorKind { Lower, Raise, FieldEnergy };

struct PhotonFactor {
    FactorKind kind = FactorKind::FieldEnergy;
    int ladder = 0;

    bool operator==(const PhotonFactor&) const = default;
};

// Product of photon factors, applied right to left; empty means identity.
// Strings are interpreted on the truncated space, so a normal-ordered string
// equals the projection of the untruncated operator.
using PhotonString = std::vector<PhotonFactor>;

inline PhotonFactor lower(int ladder) { return {FactorKind::Lower, ladder}; }
inline PhotonFactor raise(int ladder) { return {FactorKind::Raise, ladder}; }
inline PhotonFactor field_energy() { return {FactorKind::FieldEnergy, 0}; }

// Sum over terms A_t (x) P_t, with A_t a 2x2 matrix on (g, e) and P_t a photon
// string. Immutable once assembled; apply() is safe to call concurrently.
class TermOperator {
public:
    TermOperator(FockBasis basis, std::vector<double> mode_energies);

    // Registers the collective lowering operator sum_k amplitudes_k b_k.
    int add_ladder(const std::vector<double>& amplitudes);

    // Terms with an identical photon string are merged.
    void add(const Atomic& atomic, const PhotonString& photons);

    const FockBasis& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.dim(); }
    std::size_t term_count() const noexcept { return strings_.size(); }

    // out = H in.
    void apply(const CVec& in, CVec& out) const;
    CVec apply(const CVec& in) const;

    // sum_k amplitudes_k^2 for a registered ladder.
    double ladder_norm2(int ladder) const;

    // Diagonal of the free part: omega0 (atom) + sum of photon energies, with
    // the given atomic frequency.
    double free_energy(std::size_t index, double omega0) const;

    CSparse to_sparse() const;

private:
    using RealSparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;

    void apply_string(const PhotonString& s, const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out,
                      Eigen::MatrixXcd& scratch) const;
    RealSparse string_matrix(const PhotonString& s) const;

    FockBasis basis_;
    std::vector<double> photon_energy_; // diagonal of H_F, length photon_dim
    std::vector<RealSparse> lowering_;
    std::vector<RealSparse> raising_;
    std::vector<double> ladder_norm2_;
    std::vector<PhotonString> strings_;
    std::vector<Atomic> atomics_;
};

} // namespace tlagauge
