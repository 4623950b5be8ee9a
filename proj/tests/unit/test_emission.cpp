#include "doctest.h"

#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "tlagauge/emission/experiment.hpp"
#include "tlagauge/emission/hamiltonian.hpp"
#include "tlagauge/emission/oracle.hpp"
#include "tlagauge/emission/propagator.hpp"
#include "tlagauge/emission/spectrum.hpp"
#include "tlagauge/errors.hpp"

using namespace tlagauge;

namespace {

const TlaParams kParams = TlaParams::from_decay_rate(1.0, 0.02);

ModeBath small_bath(std::size_t n, double rate = 0.02, double lo = 0.5, double hi = 1.5)
{
    return discretize(SpectralDensity::free_space(1.0, rate), {lo, hi}, n, QuadratureRule::UniformGrid);
}

// Independent Fock-space oracle: occupation vectors with at most `cap`
// photons, dense operators, projection onto at most two photons.
struct FockOracle {
    int n_modes;
    std::vector<std::vector<int>> states;
    std::map<std::vector<int>, int> index;

    FockOracle(int modes, int cap) : n_modes(modes)
    {
        std::vector<int> occ(static_cast<std::size_t>(modes), 0);
        enumerate(occ, 0, cap);
        for (std::size_t i = 0; i < states.size(); ++i) {
            index[states[i]] = static_cast<int>(i);
        }
    }

    void enumerate(std::vector<int>& occ, int mode, int left)
    {
        if (mode == n_modes) {
            states.push_back(occ);
            return;
        }
        for (int n = 0; n <= left; ++n) {
            occ[static_cast<std::size_t>(mode)] = n;
            enumerate(occ, mode + 1, left - n);
        }
        occ[static_cast<std::size_t>(mode)] = 0;
    }

    Eigen::MatrixXcd lowering(const std::vector<double>& amp) const
    {
        const auto d = static_cast<Eigen::Index>(states.size());
        Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(d, d);
        for (std::size_t i = 0; i < states.size(); ++i) {
            for (int k = 0; k < n_modes; ++k) {
                const int n = states[i][static_cast<std::size_t>(k)];
                if (n == 0) {
                    continue;
                }
                auto lowered = states[i];
                lowered[static_cast<std::size_t>(k)] -= 1;
                l(index.at(lowered), static_cast<Eigen::Index>(i)) += amp[static_cast<std::size_t>(k)] * std::sqrt(double(n));
            }
        }
        return l;
    }

    Eigen::MatrixXcd field_energy(const std::vector<double>& omegas) const
    {
        const auto d = static_cast<Eigen::Index>(states.size());
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
        for (std::size_t i = 0; i < states.size(); ++i) {
            double e = 0.0;
            for (int k = 0; k < n_modes; ++k) {
                e += omegas[static_cast<std::size_t>(k)] * states[i][static_cast<std::size_t>(k)];
            }
            h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = e;
        }
        return h;
    }

    // Maps the oracle's <=2-photon states to FockBasis photon indices.
    std::vector<std::pair<int, std::size_t>> projection(const FockBasis& basis) const
    {
        std::vector<std::pair<int, std::size_t>> out;
        for (std::size_t i = 0; i < states.size(); ++i) {
            const int total = std::accumulate(states[i].begin(), states[i].end(), 0);
            if (total > basis.max_photons()) {
                continue;
            }
            PhotonLabel l;
            for (int k = 0; k < n_modes; ++k) {
                for (int c = 0; c < states[i][static_cast<std::size_t>(k)]; ++c) {
                    (l.p < 0 ? l.p : l.q) = k;
                }
            }
            out.emplace_back(static_cast<int>(i), basis.photon_index(l));
        }
        return out;
    }
};

Eigen::MatrixXcd kron2(const Atomic& a, const Eigen::MatrixXcd& b)
{
    Eigen::MatrixXcd out(2 * b.rows(), 2 * b.cols());
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd dense(const TermOperator& op) { return Eigen::MatrixXcd(op.to_sparse()); }

// Dense exp(-iHt) psi through the Hermitian eigendecomposition.
CVec dense_evolve(const Eigen::MatrixXcd& h, const CVec& psi, double t)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phase(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phase.size(); ++i) {
        phase(i) = std::exp(cplx(0.0, -es.eigenvalues()(i) * t));
    }
    return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint() * psi;
}

} // namespace

TEST_CASE("basis dimensions")
{
    CHECK(build_basis(3, 2).dim() == 20);
    CHECK(build_basis(3, 1).dim() == 8);
    CHECK(build_basis(2000, 1).dim() == 4002);
    CHECK(build_basis(150, 2).dim() == 2 * (1 + 150 + 150 * 151 / 2));
    CHECK_THROWS_AS(build_basis(3, 3), ConfigurationError);
    CHECK_THROWS_AS(build_basis(3, 0), ConfigurationError);
}

TEST_CASE("basis index map is a bijection in graded lexicographic order")
{
    for (int mp : {1, 2}) {
        const FockBasis b(5, mp);
        for (std::size_t i = 0; i < b.dim(); ++i) {
            CHECK(b.index(b.label(i)) == i);
        }
        CHECK(b.label(0) == BasisLabel{0, {}});
        CHECK(b.label(b.photon_dim()) == BasisLabel{1, {}});
        CHECK(b.label(1) == BasisLabel{0, {0, -1}});
    }
    const FockBasis b(3, 2);
    const std::vector<PhotonLabel> expected = {{}, {0, -1}, {1, -1}, {2, -1}, {0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(b.photon_label(i) == expected[i]);
    }
}

TEST_CASE("dipole RWA structure in the single-excitation sector")
{
    const std::size_t n = 7;
    const ModeBath bath = small_bath(n);
    const FockBasis basis(n, 1);
    HamiltonianOptions opt;
    opt.rwa = true;
    opt.compensate_shift = false;
    const Eigen::MatrixXcd h = dense(assemble_hamiltonian(basis, bath, kParams, GaugeChoice::dipole(), opt).op);
    std::vector<Eigen::Index> sector = {static_cast<Eigen::Index>(basis.index({1, {}}))};
    for (int k = 0; k < static_cast<int>(n); ++k) {
        sector.push_back(static_cast<Eigen::Index>(basis.index({0, {k, -1}})));
    }
    int diag = 0;
    int offdiag = 0;
    for (Eigen::Index a : sector) {
        for (Eigen::Index b : sector) {
            if (std::abs(h(a, b)) == 0.0) {
                continue;
            }
            (a == b ? diag : offdiag) += 1;
        }
    }
    CHECK(diag == static_cast<int>(n) + 1);
    CHECK(offdiag == 2 * static_cast<int>(n));
    for (int k = 0; k < static_cast<int>(n); ++k) {
        const auto e = static_cast<Eigen::Index>(basis.index({1, {}}));
        const auto g = static_cast<Eigen::Index>(basis.index({0, {k, -1}}));
        CHECK(std::abs(h(e, g)) == doctest::Approx(bath.g_dipole[static_cast<std::size_t>(k)]).epsilon(1e-15));
    }
    // Couplings leaving the sector vanish (RWA conserves excitation number).
    for (Eigen::Index a : sector) {
        for (Eigen::Index r = 0; r < h.rows(); ++r) {
            if (std::find(sector.begin(), sector.end(), r) == sector.end()) {
                CHECK(h(r, a) == cplx(0.0));
            }
        }
    }
}

TEST_CASE("corrected Coulomb order 1 equals naive Coulomb without A^2, bit for bit")
{
    const ModeBath bath = small_bath(6);
    for (int mp : {1, 2}) {
        const FockBasis basis(6, mp);
        HamiltonianOptions naive_opt;
        naive_opt.xi0 = 0.0;
        const auto naive = assemble_hamiltonian(basis, bath, kParams, GaugeChoice::naive_coulomb(), naive_opt);
        const auto corr = assemble_hamiltonian(basis, bath, kParams, GaugeChoice::corrected_coulomb(1));
        const Eigen::MatrixXcd a = dense(naive.op);
        const Eigen::MatrixXcd b = dense(corr.op);
        CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
        CHECK(naive.omega0_effective == corr.omega0_effective);
    }
}

TEST_CASE("Milonni replacement and TRK naive Coulomb assemble the same operator")
{
    const ModeBath bath = small_bath(5);
    const FockBasis basis(5, 2);
    const auto naive = assemble_hamiltonian(basis, bath, kParams, GaugeChoice::naive_coulomb());
    const auto mil = assemble_hamiltonian(basis, bath, kParams, GaugeChoice::milonni());
    CHECK((dense(naive.op) - dense(mil.op)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(derive_xi0(kParams) == doctest::Approx(kParams.omega0() * kParams.dipole() * kParams.dipole()));
}

TEST_CASE("derive_xi0")
{
    CHECK(derive_xi0(TlaParams(1.0, 1.0)) == 1.0);
    CHECK(derive_xi0(TlaParams(1.0, 0.5)) == 0.25);
}

TEST_CASE("zero coupling gives the free spectrum in every gauge")
{
    const std::size_t n = 4;
    const ModeBath bath = small_bath(n, 0.0);
    const FockBasis basis(n, 2);
    std::vector<double> expected = {0.0, 1.0};
    for (double w : bath.omegas) {
        expected.push_back(w);
        expected.push_back(1.0 + w);
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p; q < n; ++q) {
            expected.push_back(bath.omegas[p] + bath.omegas[q]);
            expected.push_back(1.0 + bath.omegas[p] + bath.omegas[q]);
        }
    }
    std::sort(expected.begin(), expected.end());
    for (GaugeChoice gauge : {GaugeChoice::dipole(), GaugeChoice::naive_coulomb(), GaugeChoice::corrected_coulomb(2),
                              GaugeChoice::corrected_coulomb(3), GaugeChoice::milonni()}) {
        const auto h = assemble_hamiltonian(basis, bath, kParams, gauge);
        const Eigen::MatrixXcd m = dense(h.op);
        const Eigen::MatrixXcd off = m - Eigen::MatrixXcd(m.diagonal().asDiagonal());
        CHECK(off.cwiseAbs().maxCoeff() == 0.0);
        std::vector<double> diag(static_cast<std::size_t>(m.rows()));
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            diag[static_cast<std::size_t>(i)] = m(i, i).real();
            CHECK(m(i, i).real() == doctest::Approx(h.op.free_energy(static_cast<std::size_t>(i), 1.0)).epsilon(1e-15));
        }
        std::sort(diag.begin(), diag.end());
        for (std::size_t i = 0; i < diag.size(); ++i) {
            CHECK(diag[i] == doctest::Approx(expected[i]).epsilon(1e-14));
        }
    }
}

TEST_CASE("assembled Hamiltonians match an untruncated Fock-space oracle")
{
    const int n = 3;
    const ModeBath bath = small_bath(3, 0.3, 0.6, 1.4);
    const FockBasis basis(3, 2);
    const FockOracle oracle(n, 5);
    const auto amp = vector_potential_amplitudes(bath);
    const Eigen::MatrixXcd l = oracle.lowering(amp);
    const Eigen::MatrixXcd x = l + l.adjoint();
    const Eigen::MatrixXcd hf = oracle.field_energy(bath.omegas);
    const auto d = static_cast<Eigen::Index>(oracle.states.size());
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    const double w0 = kParams.omega0();

    auto compare = [&](const Eigen::MatrixXcd& full, const TermOperator& op) {
        const Eigen::MatrixXcd h = dense(op);
        const auto proj = oracle.projection(basis);
        const auto pd = static_cast<Eigen::Index>(basis.photon_dim());
        double worst = 0.0;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                for (const auto& [oi, bi] : proj) {
                    for (const auto& [oj, bj] : proj) {
                        const cplx ref = full(a * d + oi, b * d + oj);
                        const cplx got = h(a * pd + static_cast<Eigen::Index>(bi), b * pd + static_cast<Eigen::Index>(bj));
                        worst = std::max(worst, std::abs(ref - got));
                    }
                }
            }
        }
        return worst;
    };

    HamiltonianOptions off;
    off.compensate_shift = false;
    const Eigen::MatrixXcd free = kron2(Atomic::Identity(), hf) + kron2(excited_projector(), w0 * id);

    const Eigen::MatrixXcd naive = free + kron2(w0 * pauli_y(), x) + kron2(Atomic::Identity(), w0 * x * x);
    CHECK(compare(naive, assemble_hamiltonian(basis, bath, kParams, GaugeChoice::naive_coulomb(), off).op) < 1e-14);

    HamiltonianOptions off_rwa = off;
    off_rwa.rwa = true;
    const Eigen::MatrixXcd naive_rwa = free + kron2(cplx(0.0, -w0) * sigma_plus(), l) +
                                       kron2(cplx(0.0, w0) * sigma_minus(), l.adjoint()) +
                                       kron2(Atomic::Identity(), w0 * (2.0 * l.adjoint() * l + std::inner_product(amp.begin(), amp.end(), amp.begin(), 0.0) * id));
    CHECK(compare(naive_rwa, assemble_hamiltonian(basis, bath, kParams, GaugeChoice::naive_coulomb(), off_rwa).op) <
          1e-14);

    Eigen::MatrixXcd corr = free + kron2(w0 * pauli_y(), x) - kron2(w0 * pauli_z(), x * x);
    CHECK(compare(corr, assemble_hamiltonian(basis, bath, kParams, GaugeChoice::corrected_coulomb(2), off).op) < 1e-14);
    corr -= kron2((2.0 * w0 / 3.0) * pauli_y(), x * x * x);
    CHECK(compare(corr, assemble_hamiltonian(basis, bath, kParams, GaugeChoice::corrected_coulomb(3), off).op) < 1e-14);

    const Eigen::MatrixXcd lg = oracle.lowering(bath.g_dipole);
    const Eigen::MatrixXcd dip = free - kron2(pauli_x(), lg + lg.adjoint());
    CHECK(compare(dip, assemble_hamiltonian(basis, bath, kParams, GaugeChoice::dipole(), off).op) < 1e-14);
}

TEST_CASE("corrected Coulomb expansion is the series of the exact rotation")
{
    // (w0/2)[cos(Phi) sigma_z + sin(Phi) sigma_y] = (w0/2) exp(i X sx) sigma_z exp(-i X sx) for a scalar X.
    const double w0 = 1.0;
    for (double xv : {0.01, 0.05}) {
        const Atomic rot = std::cos(xv) * Atomic::Identity() + cplx(0.0, std::sin(xv)) * pauli_x();
        const Atomic exact = 0.5 * w0 * rot * pauli_z() * rot.adjoint();
        const Atomic order3 = 0.5 * w0 * pauli_z() + w0 * xv * pauli_y() - w0 * xv * xv * pauli_z() -
                              (2.0 * w0 / 3.0) * xv * xv * xv * pauli_y();
        CHECK((exact - order3).cwiseAbs().maxCoeff() < 2.0 * std::pow(xv, 4));
    }
}

TEST_CASE("assembly errors")
{
    const ModeBath bath = small_bath(4);
    CHECK_THROWS_AS(assemble_hamiltonian(FockBasis(4, 1), bath, kParams, GaugeChoice::corrected_coulomb(2)),
                    ConfigurationError);
    CHECK_THROWS_AS(assemble_hamiltonian(FockBasis(4, 1), bath, kParams, GaugeChoice::corrected_coulomb(3)),
                    ConfigurationError);
    CHECK_NOTHROW(assemble_hamiltonian(FockBasis(4, 1), bath, kParams, GaugeChoice::corrected_coulomb(1)));
    CHECK_THROWS_AS(assemble_hamiltonian(FockBasis(4, 2), bath, kParams, GaugeChoice::corrected_coulomb(4)),
                    ConfigurationError);
    CHECK_THROWS_AS(assemble_hamiltonian(FockBasis(5, 1), bath, kParams, GaugeChoice::dipole()), ValidationError);
    HamiltonianOptions rwa;
    rwa.rwa = true;
    CHECK_THROWS_AS(assemble_hamiltonian(FockBasis(4, 2), bath, kParams, GaugeChoice::corrected_coulomb(2), rwa),
                    ConfigurationError);
    CHECK_NOTHROW(assemble_hamiltonian(FockBasis(4, 1), bath, kParams, GaugeChoice::naive_coulomb(), rwa));
}

TEST_CASE("Hermiticity and RWA excitation-number conservation on small instances")
{
    for (std::size_t n : {2u, 4u, 10u}) {
        const ModeBath bath = small_bath(n, 0.05);
        for (int mp : {1, 2}) {
            const FockBasis basis(n, mp);
            std::vector<std::pair<GaugeChoice, bool>> cases = {
                {GaugeChoice::dipole(), false}, {GaugeChoice::dipole(), true}, {GaugeChoice::naive_coulomb(), false},
                {GaugeChoice::naive_coulomb(), true}, {GaugeChoice::milonni(), false}, {GaugeChoice::milonni(), true}, {GaugeChoice::corrected_coulomb(1), false}};
            if (mp == 2) {
                cases.push_back({GaugeChoice::corrected_coulomb(2), false});
                cases.push_back({GaugeChoice::corrected_coulomb(3), false});
            }
            for (const auto& [gauge, rwa] : cases) {
                HamiltonianOptions opt;
                opt.rwa = rwa;
                const auto h = assemble_hamiltonian(basis, bath, kParams, gauge, opt);
                CHECK(hermiticity_defect(h.op) < 1e-12);
                if (rwa) {
                    const Eigen::MatrixXcd m = dense(h.op);
                    Eigen::VectorXd nexc(m.rows());
                    for (Eigen::Index i = 0; i < m.rows(); ++i) {
                        const BasisLabel l = basis.label(static_cast<std::size_t>(i));
                        nexc(i) = l.atom + l.photons.count();
                    }
                    const Eigen::MatrixXcd comm = m * nexc.asDiagonal() - nexc.asDiagonal() * m;
                    CHECK(comm.cwiseAbs().maxCoeff() == 0.0);
                }
            }
        }
    }
}

TEST_CASE("matrix-free apply agrees with the assembled sparse matrix")
{
    const ModeBath bath = small_bath(6, 0.05);
    const FockBasis basis(6, 2);
    const auto h = assemble_hamiltonian(basis, bath, kParams, GaugeChoice::corrected_coulomb(3));
    CVec psi = CVec::Random(static_cast<Eigen::Index>(basis.dim()));
    const CVec a = h.op.apply(psi);
    const CVec b = h.op.to_sparse() * psi;
    CHECK((a - b).norm() < 1e-13 * b.norm());
}

TEST_CASE("level-shift counterterm equals the RWA second-order shift")
{
    const ModeBath bath = small_bath(50);
    const FockBasis basis(50, 1);
    HamiltonianOptions opt;
    opt.rwa = true;
    const auto h = assemble_hamiltonian(basis, bath, kParams, GaugeChoice::dipole(), opt);
    double expected = 0.0;
    for (std::size_t k = 0; k < bath.size(); ++k) {
        expected += bath.g_dipole[k] * bath.g_dipole[k] / (1.0 - bath.omegas[k]);
    }
    CHECK(h.level_shift == doctest::Approx(expected).epsilon(1e-12));
    CHECK(h.omega0_effective == doctest::Approx(1.0 - expected).epsilon(1e-14));
}

TEST_CASE("free evolution of |e,vac>")
{
    const ModeBath bath = small_bath(5, 0.0);
    const FockBasis basis(5, 2);
    const auto h = assemble_hamiltonian(basis, bath, kParams, GaugeChoice::corrected_coulomb(2));
    CVec psi = CVec::Zero(static_cast<Eigen::Index>(basis.dim()));
    const auto e = static_cast<Eigen::Index>(basis.index({1, {}}));
    psi(e) = 1.0;
    for (double t : {0.3, 7.0, 123.4}) {
        const CVec out = propagate_to(h.op, psi, t);
        CHECK(std::abs(out(e) - std::exp(cplx(0.0, -t))) < 1e-10);
        CHECK(std::norm(out(e)) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("single resonant mode Rabi oscillation")
{
    ModeBath bath;
    bath.omegas = {1.0};
    bath.weights = {0.1};
    bath.g_dipole = {0.01};
    bath.band = {0.95, 1.05};
    const FockBasis basis(1, 1);
    HamiltonianOptions opt;
    opt.rwa = true;
    opt.compensate_shift = false;
    const auto h = assemble_hamiltonian(basis, bath, kParams, GaugeChoice::dipole(), opt);
    CVec psi = CVec::Zero(static_cast<Eigen::Index>(basis.dim()));
    const auto e = static_cast<Eigen::Index>(basis.index({1, {}}));
    psi(e) = 1.0;
    std::vector<double> times = {10.0, 50.0, 100.0, 157.0, 300.0};
    const Trajectory traj = propagate(h.op, psi, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double expected = std::pow(std::cos(0.01 * times[i]), 2);
        CHECK(std::norm(traj.states[i](e)) == doctest::Approx(expected).epsilon(1e-9));
        CHECK(traj.norm_drift[i] < 1e-10);
    }
}

TEST_CASE("Krylov propagation matches dense exponentiation")
{
    const ModeBath bath = small_bath(4, 0.1);
    const FockBasis basis(4, 2);
    for (GaugeChoice gauge : {GaugeChoice::dipole(), GaugeChoice::corrected_coulomb(3)}) {
        const auto h = assemble_hamiltonian(basis, bath, kParams, gauge);
        CVec psi = CVec::Random(static_cast<Eigen::Index>(basis.dim()));
        psi.normalize();
        const CVec ref = dense_evolve(dense(h.op), psi, 37.5);
        PropagatorOptions opt;
        opt.krylov_dim = 8;
        const CVec got = propagate_to(h.op, psi, 37.5, opt);
        CHECK((got - ref).norm() < 1e-8);
        CHECK(std::abs(got.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("dressed state equals exp(i X sigma_x) applied densely")
{
    const ModeBath bath = small_bath(4, 0.2);
    const FockBasis basis(4, 2);
    TermOperator xop(basis, bath.omegas);
    const int la = xop.add_ladder(vector_potential_amplitudes(bath));
    xop.add(pauli_x(), {lower(la)});
    xop.add(pauli_x(), {raise(la)});
    const Eigen::MatrixXcd k = dense(xop);
    for (int atom : {0, 1}) {
        CVec bare = CVec::Zero(static_cast<Eigen::Index>(basis.dim()));
        bare(static_cast<Eigen::Index>(basis.index({atom, {}}))) = 1.0;
        const CVec ref = dense_evolve(-k, bare, 1.0);
        CHECK((dressed_state(basis, bath, atom) - ref).norm() < 1e-10);
    }
}

TEST_CASE("propagator rejects bad input")
{
    const ModeBath bath = small_bath(3);
    const FockBasis basis(3, 1);
    const auto h = assemble_hamiltonian(basis, bath, kParams, GaugeChoice::dipole());
    CVec psi = CVec::Zero(static_cast<Eigen::Index>(basis.dim()));
    psi(0) = 1.0;
    PropagatorOptions bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(propagate(h.op, psi, {1.0}, bad), ValidationError);
    CHECK_THROWS_AS(propagate(h.op, psi, {2.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(propagate(h.op, CVec::Zero(3), {1.0}), ValidationError);
}

TEST_CASE("RWA emission: excitation conservation and empty baseline")
{
    EmissionSetup setup;
    setup.params = kParams;
    setup.bath = small_bath(400);
    setup.gauge = GaugeChoice::dipole();
    setup.hamiltonian.rwa = true;
    setup.t_final = 300.0;
    setup.survival_times = {50.0};
    const EmissionResult r = run_emission(setup);
    const FockBasis basis(400, 1);
    double photons = 0.0;
    for (std::size_t k = 0; k < setup.bath.size(); ++k) {
        photons += r.raw.density[k] * setup.bath.weights[k];
        CHECK(r.raw.density_baseline[k] == 0.0);
    }
    CHECK(photons + r.residual_excitation == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.normalized.integral() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.survival[0] == doctest::Approx(std::exp(-1.0)).epsilon(0.02));
    CHECK(r.max_norm_drift < 1e-8);
}

TEST_CASE("decay rate converges under mode refinement")
{
    // Rate from the survival at 2/Gamma0; refinement 1000 -> 2000 modes changes it by < 0.5%.
    auto rate = [](std::size_t n) {
        EmissionSetup setup;
        setup.params = kParams;
        setup.bath = small_bath(n);
        setup.gauge = GaugeChoice::dipole();
        setup.hamiltonian.rwa = true;
        setup.t_final = 100.0;
        setup.subtract_baseline = false;
        const EmissionResult r = run_emission(setup);
        return -std::log(r.residual_excitation) / 100.0;
    };
    const double r1 = rate(1000);
    const double r2 = rate(2000);
    CHECK(std::abs(r2 / r1 - 1.0) < 0.005);
    CHECK(r2 == doctest::Approx(0.02).epsilon(0.01));
}

TEST_CASE("spectrum normalisation and peak estimate")
{
    const ModeBath bath = small_bath(500);
    const TlaParams p = kParams;
    Spectrum s;
    s.omegas = bath.omegas;
    s.weights = bath.weights;
    const LineshapeModel l{LineshapeVariant::S0Lorentzian, p, 1.0013};
    for (double w : bath.omegas) {
        s.density.push_back(eval_lineshape(l, w));
        s.density_baseline.push_back(0.0);
    }
    // A Lorentzian is exactly a parabola in 1/density.
    CHECK(estimate_peak(s.omegas, s.density) == doctest::Approx(1.0013).epsilon(1e-12));
    const Spectrum n = normalize(s);
    CHECK(n.integral() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(n.normalized);
    Spectrum zero = s;
    std::fill(zero.density.begin(), zero.density.end(), 0.0);
    CHECK_THROWS_AS(normalize(zero), ValidationError);
}

TEST_CASE("gauge comparison")
{
    const ModeBath bath = small_bath(300);
    const LineshapeModel sph{LineshapeVariant::SPh, kParams};
    const LineshapeModel sphp{LineshapeVariant::SPhPrime, kParams};
    Spectrum a;
    Spectrum b;
    a.omegas = b.omegas = bath.omegas;
    a.weights = b.weights = bath.weights;
    for (double w : bath.omegas) {
        a.density.push_back(eval_lineshape(sph, w));
        b.density.push_back(eval_lineshape(sphp, w));
    }
    const GaugeComparison same = gauge_comparison(a, a);
    CHECK(std::abs(same.exponent) < 1e-12);
    for (double r : same.ratio) {
        CHECK(r == doctest::Approx(1.0).epsilon(1e-14));
    }
    ComparisonOptions fixed;
    fixed.recenter = false;
    const GaugeComparison ab = gauge_comparison(a, b, fixed);
    CHECK(ab.exponent == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(gauge_comparison(b, a, fixed).exponent == doctest::Approx(-2.0).epsilon(1e-9));

    Spectrum c = b;
    c.omegas.pop_back();
    c.density.pop_back();
    CHECK_THROWS_AS(gauge_comparison(a, c), ValidationError);
    Spectrum d = b;
    d.omegas[3] += 1e-3;
    CHECK_THROWS_AS(gauge_comparison(a, d), ValidationError);
}

TEST_CASE("Wigner-Weisskopf oracle")
{
    const ModeBath bath = small_bath(100);
    const WwOracle o(kParams, bath);
    CHECK(o.warnings().empty());
    CHECK(o.survival(1.0 / 0.02) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(std::norm(o.amplitude(50.0)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(o.spectrum(1.0, GaugeKind::Dipole) == doctest::Approx(31.8310).epsilon(1e-5));
    const double ratio = o.spectrum(1.1, GaugeKind::Dipole) / o.spectrum(0.9, GaugeKind::Dipole);
    CHECK(ratio == doctest::Approx(std::pow(1.1 / 0.9, 3)).epsilon(1e-13));
    const double half = o.spectrum(1.05, GaugeKind::Dipole) / o.spectrum(0.95, GaugeKind::Dipole);
    CHECK(half == doctest::Approx(1.349).epsilon(1e-3));
    CHECK(o.spectrum(1.2, GaugeKind::Dipole) / o.spectrum(1.2, GaugeKind::NaiveCoulomb) == doctest::Approx(1.44));
    CHECK(o.spectrum_on_grid(GaugeKind::Dipole).size() == 100);

    const WwOracle strong(TlaParams::from_decay_rate(1.0, 0.2), bath);
    CHECK(strong.warnings().size() == 1);
}

TEST_CASE("short runs warn")
{
    EmissionSetup setup;
    setup.params = kParams;
    setup.bath = small_bath(100);
    setup.hamiltonian.rwa = true;
    setup.t_final = 100.0;
    const EmissionResult r = run_emission(setup);
    REQUIRE(!r.warnings.empty());
    CHECK(r.warnings.front().find("8/Gamma0") != std::string::npos);
    setup.t_final = 700.0;
    const EmissionResult r2 = run_emission(setup);
    bool recurrence = false;
    for (const auto& w : r2.warnings) {
        recurrence = recurrence || w.find("recurrence") != std::string::npos;
    }
    CHECK(recurrence);
}
