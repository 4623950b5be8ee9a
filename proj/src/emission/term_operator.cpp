#include "tlagauge/emission/term_operator.hpp"

#include <cmath>

#include <Eigen/SparseCore>

#include "tlagauge/errors.hpp"

namespace tlagauge {

namespace {

using Triplet = Eigen::Triplet<double>;

// y = A x for a real row-major sparse A and a complex column block x.
template <class Sparse>
void sparse_times(const Sparse& a, const Eigen::MatrixXcd& x, Eigen::MatrixXcd& y)
{
    y.resize(a.rows(), x.cols());
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        for (Eigen::Index r = 0; r < a.outerSize(); ++r) {
            cplx acc = 0.0;
            for (typename Sparse::InnerIterator it(a, r); it; ++it) {
                acc += it.value() * x(it.col(), c);
            }
            y(r, c) = acc;
        }
    }
}

} // namespace

TermOperator::TermOperator(FockBasis basis, std::vector<double> mode_energies) : basis_(basis)
{
    if (mode_energies.size() != basis_.n_modes()) {
        throw_validation("mode energies do not match the basis mode count");
    }
    photon_energy_.assign(basis_.photon_dim(), 0.0);
    for (std::size_t i = 0; i < basis_.photon_dim(); ++i) {
        const PhotonLabel l = basis_.photon_label(i);
        if (l.p >= 0) {
            photon_energy_[i] += mode_energies[static_cast<std::size_t>(l.p)];
        }
        if (l.q >= 0) {
            photon_energy_[i] += mode_energies[static_cast<std::size_t>(l.q)];
        }
    }
}

int TermOperator::add_ladder(const std::vector<double>& amplitudes)
{
    const std::size_t n = basis_.n_modes();
    if (amplitudes.size() != n) {
        throw_validation("ladder amplitudes do not match the basis mode count");
    }
    const auto d = static_cast<Eigen::Index>(basis_.photon_dim());
    std::vector<Triplet> trip;
    trip.reserve(n + (basis_.max_photons() == 2 ? n * (n + 1) : 0));
    for (std::size_t k = 0; k < n; ++k) {
        trip.emplace_back(0, static_cast<int>(basis_.single_index(static_cast<int>(k))), amplitudes[k]);
    }
    if (basis_.max_photons() == 2) {
        for (int p = 0; p < static_cast<int>(n); ++p) {
            for (int q = p; q < static_cast<int>(n); ++q) {
                const auto col = static_cast<int>(basis_.pair_index(p, q));
                if (p == q) {
                    trip.emplace_back(static_cast<int>(basis_.single_index(p)), col,
                                      std::sqrt(2.0) * amplitudes[static_cast<std::size_t>(p)]);
                } else {
                    trip.emplace_back(static_cast<int>(basis_.single_index(q)), col,
                                      amplitudes[static_cast<std::size_t>(p)]);
                    trip.emplace_back(static_cast<int>(basis_.single_index(p)), col,
                                      amplitudes[static_cast<std::size_t>(q)]);
                }
            }
        }
    }
    RealSparse l(d, d);
    l.setFromTriplets(trip.begin(), trip.end());
    RealSparse lt = l.transpose();
    lowering_.push_back(std::move(l));
    raising_.push_back(std::move(lt));
    double s = 0.0;
    for (double a : amplitudes) {
        s += a * a;
    }
    ladder_norm2_.push_back(s);
    return static_cast<int>(lowering_.size()) - 1;
}

void TermOperator::add(const Atomic& atomic, const PhotonString& photons)
{
    for (const PhotonFactor& f : photons) {
        if (f.kind != FactorKind::FieldEnergy && (f.ladder < 0 || f.ladder >= static_cast<int>(lowering_.size()))) {
            throw_validation("photon string references an unknown ladder");
        }
    }
    for (std::size_t i = 0; i < strings_.size(); ++i) {
        if (strings_[i] == photons) {
            atomics_[i] += atomic;
            return;
        }
    }
    strings_.push_back(photons);
    atomics_.push_back(atomic);
}

double TermOperator::ladder_norm2(int ladder) const { return ladder_norm2_.at(static_cast<std::size_t>(ladder)); }

double TermOperator::free_energy(std::size_t index, double omega0) const
{
    const BasisLabel l = basis_.label(index);
    return omega0 * l.atom + photon_energy_[index - static_cast<std::size_t>(l.atom) * basis_.photon_dim()];
}

void TermOperator::apply_string(const PhotonString& s, const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out,
                                Eigen::MatrixXcd& scratch) const
{
    out = in;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        switch (it->kind) {
        case FactorKind::Lower:
            sparse_times(lowering_[static_cast<std::size_t>(it->ladder)], out, scratch);
            out.swap(scratch);
            break;
        case FactorKind::Raise:
            sparse_times(raising_[static_cast<std::size_t>(it->ladder)], out, scratch);
            out.swap(scratch);
            break;
        case FactorKind::FieldEnergy:
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                for (Eigen::Index r = 0; r < out.rows(); ++r) {
                    out(r, c) *= photon_energy_[static_cast<std::size_t>(r)];
                }
            }
            break;
        }
    }
}

void TermOperator::apply(const CVec& in, CVec& out) const
{
    const auto d = static_cast<Eigen::Index>(basis_.photon_dim());
    if (in.size() != 2 * d) {
        throw_validation("state dimension does not match operator");
    }
    const Eigen::Map<const Eigen::MatrixXcd> blocks(in.data(), d, 2);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, 2);
    Eigen::MatrixXcd phi;
    Eigen::MatrixXcd scratch;
    const Eigen::MatrixXcd input = blocks;
    for (std::size_t t = 0; t < strings_.size(); ++t) {
        apply_string(strings_[t], input, phi, scratch);
        acc.noalias() += phi * atomics_[t].transpose();
    }
    out = Eigen::Map<const CVec>(acc.data(), 2 * d);
}

CVec TermOperator::apply(const CVec& in) const
{
    CVec out;
    apply(in, out);
    return out;
}

TermOperator::RealSparse TermOperator::string_matrix(const PhotonString& s) const
{
    const auto d = static_cast<Eigen::Index>(basis_.photon_dim());
    RealSparse m(d, d);
    m.setIdentity();
    for (const PhotonFactor& f : s) {
        switch (f.kind) {
        case FactorKind::Lower:
            m = RealSparse(m * lowering_[static_cast<std::size_t>(f.ladder)]);
            break;
        case FactorKind::Raise:
            m = RealSparse(m * raising_[static_cast<std::size_t>(f.ladder)]);
            break;
        case FactorKind::FieldEnergy: {
            RealSparse e(d, d);
            std::vector<Triplet> trip;
            for (Eigen::Index i = 0; i < d; ++i) {
                trip.emplace_back(static_cast<int>(i), static_cast<int>(i), photon_energy_[static_cast<std::size_t>(i)]);
            }
            e.setFromTriplets(trip.begin(), trip.end());
            m = RealSparse(m * e);
            break;
        }
        }
    }
    return m;
}

CSparse TermOperator::to_sparse() const
{
    const auto d = static_cast<Eigen::Index>(basis_.photon_dim());
    std::vector<Eigen::Triplet<cplx>> trip;
    for (std::size_t t = 0; t < strings_.size(); ++t) {
        const RealSparse p = string_matrix(strings_[t]);
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const cplx coef = atomics_[t](a, b);
                if (coef == 0.0) {
                    continue;
                }
                for (Eigen::Index r = 0; r < p.outerSize(); ++r) {
                    for (RealSparse::InnerIterator it(p, r); it; ++it) {
                        trip.emplace_back(static_cast<int>(a * d + it.row()), static_cast<int>(b * d + it.col()),
                                          coef * it.value());
                    }
                }
            }
        }
    }
    CSparse h(2 * d, 2 * d);
    h.setFromTriplets(trip.begin(), trip.end());
    h.prune(cplx(0.0));
    return h;
}

} // namespace tlagauge
