#include "doctest.h"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "tlagauge/errors.hpp"
#include "tlagauge/mastereq/gauge_gap.hpp"

using namespace tlagauge;

namespace {

const TlaParams kTla = TlaParams::from_decay_rate(1.0, 0.02);

SystemModel exchange_model(double g, double aux_omega = 1.0)
{
    return build_system(kTla, {{aux_omega, AuxKind::TwoLevel, 1}}, ExchangeSpec{{{0, g}}});
}

Eigen::MatrixXcd random_density(Eigen::Index n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = std::complex<double>(normal(rng), normal(rng));
        }
    }
    Eigen::MatrixXcd rho = a * a.adjoint();
    return rho / rho.trace();
}

} // namespace

TEST_CASE("bare TLA system")
{
    const SystemModel m = build_system(kTla, {}, NoCoupling{});
    CHECK(m.dim == 2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.hs);
    CHECK(es.eigenvalues()(0) == doctest::Approx(0.0));
    CHECK(es.eigenvalues()(1) == doctest::Approx(1.0));
}

TEST_CASE("resonant exchange splits the single-excitation doublet")
{
    const SystemModel m = exchange_model(0.1);
    CHECK(m.dim == 4);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.hs);
    const Eigen::VectorXd e = es.eigenvalues();
    CHECK(e(0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(e(1) == doctest::Approx(0.9).epsilon(1e-14));
    CHECK(e(2) == doctest::Approx(1.1).epsilon(1e-14));
    CHECK(e(3) == doctest::Approx(2.0).epsilon(1e-14));
    // h0 diagonal with omega0 n_tla + omega_j n_j.
    CHECK(m.h0(product_index(m, 1, {1}), product_index(m, 1, {1})).real() == doctest::Approx(2.0));
}

TEST_CASE("oscillator auxiliary reproduces the Jaynes-Cummings ladder")
{
    const double g = 0.05;
    const double wa = 1.1; // detuning 0.1 from omega0
    const int trunc = 5;
    const SystemModel m = build_system(kTla, {{wa, AuxKind::Oscillator, trunc}}, ExchangeSpec{{{0, g}}});
    CHECK(m.dim == 12);
    std::vector<double> expected = {0.0};
    const double half = 0.5 * (1.0 - wa);
    for (int n = 1; n <= trunc; ++n) {
        // |e, n-1> and |g, n> mix with coupling g sqrt(n).
        const double centre = 0.5 * (1.0 + (n - 1) * wa + n * wa);
        const double split = std::sqrt(half * half + g * g * n);
        expected.push_back(centre - split);
        expected.push_back(centre + split);
    }
    expected.push_back(1.0 + trunc * wa); // |e, trunc> has no partner
    std::sort(expected.begin(), expected.end());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.hs);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(std::abs(es.eigenvalues()(static_cast<Eigen::Index>(i)) - expected[i]) < 1e-12);
    }
}

TEST_CASE("build_system validation")
{
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(4, 4);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(build_system(kTla, {{1.0, AuxKind::TwoLevel, 1}}, GeneralHermitianSpec{bad}), ValidationError);
    CHECK_THROWS_AS(build_system(kTla, {{1.0, AuxKind::TwoLevel, 1}}, GeneralHermitianSpec{Eigen::MatrixXcd::Zero(3, 3)}),
                    ValidationError);
    CHECK_THROWS_AS(build_system(kTla, {{1.0, AuxKind::TwoLevel, 1}}, ExchangeSpec{{{1, 0.1}}}), ValidationError);
    CHECK_THROWS_AS(build_system(kTla, {{-1.0, AuxKind::TwoLevel, 1}}, NoCoupling{}), ValidationError);
    std::vector<AuxMode> many(12, {1.0, AuxKind::TwoLevel, 1});
    CHECK_THROWS_AS(build_system(kTla, many, NoCoupling{}), ValidationError);
    std::vector<AuxMode> six(6, {1.0, AuxKind::TwoLevel, 1});
    CHECK_THROWS_AS(build_system(kTla, six, NoCoupling{}, 64), ValidationError);
    CHECK_NOTHROW(build_system(kTla, six, NoCoupling{}, 128));
    Eigen::MatrixXcd good = Eigen::MatrixXcd::Zero(4, 4);
    good(0, 3) = std::complex<double>(0.0, 0.1);
    good(3, 0) = std::complex<double>(0.0, -0.1);
    CHECK_NOTHROW(build_system(kTla, {{1.0, AuxKind::TwoLevel, 1}}, GeneralHermitianSpec{good}));
}

TEST_CASE("random couplings are deterministic per seed")
{
    const std::vector<AuxMode> aux = {{0.8, AuxKind::TwoLevel, 1}};
    const SystemModel a = build_system(kTla, aux, RandomHermitianSpec{7, 0.1, RandomStructure::Full});
    const SystemModel b = build_system(kTla, aux, RandomHermitianSpec{7, 0.1, RandomStructure::Full});
    const SystemModel c = build_system(kTla, aux, RandomHermitianSpec{8, 0.1, RandomStructure::Full});
    CHECK((a.v - b.v).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.v - c.v).cwiseAbs().maxCoeff() > 0.0);
    CHECK((a.v - a.v.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("transition table of the bare TLA")
{
    const TransitionTable t = enumerate_transitions(build_system(kTla, {}, NoCoupling{}));
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries[0].omega == doctest::Approx(1.0));
    CHECK(t.entries[0].c == std::complex<double>(1.0, 0.0));
    CHECK(t.entries[0].cp == std::complex<double>(0.0, 1.0));
    const IdentityReport r = verify_coupling_identity(t);
    CHECK(r.max_residual == 0.0);
    CHECK(r.pass);
}

TEST_CASE("resonant exchange transitions to the ground state")
{
    const TransitionTable t = enumerate_transitions(exchange_model(0.1));
    std::vector<Transition> to_ground;
    for (const Transition& e : t.entries) {
        CHECK(e.omega > 0.0);
        if (e.j == 0) {
            to_ground.push_back(e);
        }
    }
    REQUIRE(to_ground.size() == 3);
    // The doubly excited state is two quanta above the ground state; sigma_x cannot connect them.
    CHECK(to_ground[0].omega == doctest::Approx(0.9));
    CHECK(to_ground[1].omega == doctest::Approx(1.1));
    CHECK(std::abs(to_ground[0].c) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(to_ground[1].c) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(to_ground[2].c) < 1e-14);
    CHECK(std::is_sorted(t.entries.begin(), t.entries.end(),
                         [](const Transition& a, const Transition& b) { return a.omega < b.omega; }));
}

TEST_CASE("degenerate pairs are excluded and counted")
{
    const SystemModel m = build_system(kTla, {{1.0, AuxKind::TwoLevel, 1}}, NoCoupling{});
    const TransitionTable t = enumerate_transitions(m);
    CHECK(t.excluded_degenerate == 1); // |e,0> and |g,1>
    for (const Transition& e : t.entries) {
        CHECK(e.omega > t.degeneracy_floor);
    }
}

TEST_CASE("coupling identity")
{
    SUBCASE("random V on TLA x two-level")
    {
        const SystemModel m =
            build_system(kTla, {{0.9, AuxKind::TwoLevel, 1}}, RandomHermitianSpec{7, 0.1, RandomStructure::Full});
        const IdentityReport r = verify_coupling_identity(enumerate_transitions(m));
        CHECK(r.max_residual < 1e-10);
        CHECK(r.pass);
    }
    SUBCASE("detuned exchange")
    {
        const IdentityReport r = verify_coupling_identity(enumerate_transitions(exchange_model(0.1, 1.2)));
        CHECK(r.max_residual < 1e-10);
    }
    SUBCASE("V acting on the auxiliaries only")
    {
        const SystemModel m = build_system(kTla, {{0.7, AuxKind::TwoLevel, 1}, {1.3, AuxKind::Oscillator, 2}},
                                           RandomHermitianSpec{3, 0.1, RandomStructure::AuxOnly});
        const TransitionTable t = enumerate_transitions(m);
        const IdentityReport r = verify_coupling_identity(t);
        CHECK(r.max_residual < 1e-10);
        int flips = 0;
        for (const Transition& e : t.entries) {
            if (std::abs(e.omega - 1.0) < 1e-9 && std::abs(e.c) > 1e-6) {
                CHECK(std::abs(e.cp - std::complex<double>(0.0, 1.0) * e.c) < 1e-10);
                ++flips;
            }
        }
        CHECK(flips > 0);
    }
}

TEST_CASE("secular dissipator of the bare TLA")
{
    const TransitionTable t = enumerate_transitions(build_system(kTla, {}, NoCoupling{}));
    const SpectralDensity sd = SpectralDensity::free_space(1.0, 0.02);
    for (DissipatorGauge g : {DissipatorGauge::Dipole, DissipatorGauge::Coulomb}) {
        const Dissipator d = build_dissipator(t, sd, g);
        REQUIRE(d.channels.size() == 1);
        CHECK(d.rate_max() == doctest::Approx(0.02).epsilon(1e-14));
    }
}

TEST_CASE("secular exchange dissipators: rates and gauge equality")
{
    const TransitionTable t = enumerate_transitions(exchange_model(0.1));
    const SpectralDensity sd = SpectralDensity::free_space(1.0, 0.02);
    const Dissipator dip = build_dissipator(t, sd, DissipatorGauge::Dipole);
    const Dissipator cou = build_dissipator(t, sd, DissipatorGauge::Coulomb);
    CHECK(rate_difference_max(dip, cou) <= 1e-12 * dip.rate_max());
    for (const Channel& ch : dip.channels) {
        for (std::size_t i = 0; i < ch.x.size(); ++i) {
            const Transition& e = t.entries[static_cast<std::size_t>(ch.x[i].alpha)];
            if (e.j == 0 && std::abs(e.c) > 0.1) {
                const double rate = (ch.x[i].value * std::conj(ch.y[i].value)).real();
                CHECK(rate == doctest::Approx(0.02 * std::pow(e.omega, 3) * 0.5).epsilon(1e-12));
            }
        }
    }
    CHECK(dip.min_rate_eigenvalue() > -1e-15);
}

TEST_CASE("non-secular exchange generator gap")
{
    const TransitionTable t = enumerate_transitions(exchange_model(0.1));
    DissipatorOptions ns;
    ns.secular = false;
    SUBCASE("flat spectral density")
    {
        const SpectralDensity flat(PowerLaw{0.0}, 1.0, 0.02);
        const Dissipator dip = build_dissipator(t, flat, DissipatorGauge::Dipole, ns);
        const Dissipator cou = build_dissipator(t, flat, DissipatorGauge::Coulomb, ns);
        CHECK(rate_difference_max(dip, cou) / dip.rate_max() == doctest::Approx(1.1 / 0.9 - 1.0).epsilon(1e-10));
        CHECK(frequency_ratio_spread(dip, t) == doctest::Approx(1.1 / 0.9 - 1.0).epsilon(1e-10));
    }
    SUBCASE("free-space cubic density")
    {
        const SpectralDensity sd = SpectralDensity::free_space(1.0, 0.02);
        const Dissipator dip = build_dissipator(t, sd, DissipatorGauge::Dipole, ns);
        const Dissipator cou = build_dissipator(t, sd, DissipatorGauge::Coulomb, ns);
        const double expected = 1.0 - 0.9 / 1.1;
        CHECK(rate_difference_max(dip, cou) / dip.rate_max() == doctest::Approx(expected).epsilon(1e-10));
        CHECK(frequency_ratio_spread(dip, t) == doctest::Approx(1.1 / 0.9 - 1.0).epsilon(1e-10));
    }
}

TEST_CASE("Coulomb rates from the coupling operator agree with the reduced form")
{
    const SystemModel m =
        build_system(kTla, {{1.05, AuxKind::TwoLevel, 1}}, RandomHermitianSpec{11, 0.05, RandomStructure::Full});
    const TransitionTable t = enumerate_transitions(m);
    const SpectralDensity sd = SpectralDensity::free_space(1.0, 0.02);
    for (bool secular : {true, false}) {
        DissipatorOptions reduced;
        reduced.secular = secular;
        DissipatorOptions direct = reduced;
        direct.route = CoulombRoute::CouplingOperator;
        const Dissipator a = build_dissipator(t, sd, DissipatorGauge::Coulomb, reduced);
        const Dissipator b = build_dissipator(t, sd, DissipatorGauge::Coulomb, direct);
        CHECK(rate_difference_max(a, b) < 1e-9 * a.rate_max());
    }
}

TEST_CASE("dissipators are trace preserving and secular ones have nonnegative rates")
{
    const SpectralDensity sd = SpectralDensity::free_space(1.0, 0.02);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const SystemModel m = build_system(kTla, {{0.9, AuxKind::TwoLevel, 1}, {1.2, AuxKind::Oscillator, 2}},
                                           RandomHermitianSpec{seed, 0.1, RandomStructure::Full});
        const TransitionTable t = enumerate_transitions(m);
        const Eigen::MatrixXcd rho = random_density(static_cast<Eigen::Index>(m.dim), static_cast<unsigned>(seed));
        for (bool secular : {true, false}) {
            for (DissipatorGauge g : {DissipatorGauge::Dipole, DissipatorGauge::Coulomb}) {
                DissipatorOptions o;
                o.secular = secular;
                const Dissipator d = build_dissipator(t, sd, g, o);
                const Eigen::MatrixXcd out = d.apply(rho);
                CHECK(std::abs(out.trace()) < 1e-14);
                CHECK((out - out.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
                if (secular) {
                    CHECK(d.min_rate_eigenvalue() > -1e-12 * d.rate_max());
                }
            }
        }
    }
}

TEST_CASE("bare TLA decays exponentially")
{
    const SystemModel m = build_system(kTla, {}, NoCoupling{});
    const TransitionTable t = enumerate_transitions(m);
    const Dissipator d = build_dissipator(t, SpectralDensity::free_space(1.0, 0.02), DissipatorGauge::Dipole);
    const std::vector<double> times = {0.0, 10.0, 50.0, 100.0, 250.0};
    const DensityTrajectory traj = evolve_density_matrix(m, t, d, basis_density(2, 1), times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK(std::abs(traj.rhos[i](1, 1).real() - std::exp(-0.02 * times[i])) < 1e-6);
        CHECK(traj.trace_drift[i] < 1e-10);
        CHECK(traj.min_eigenvalue[i] > -1e-10);
    }
}

TEST_CASE("the ground state is stationary")
{
    const SystemModel m = exchange_model(0.1);
    const TransitionTable t = enumerate_transitions(m);
    const SpectralDensity sd = SpectralDensity::free_space(1.0, 0.02);
    const Eigen::MatrixXcd rho0 = basis_density(4, 0);
    for (bool secular : {true, false}) {
        DissipatorOptions o;
        o.secular = secular;
        for (DissipatorGauge g : {DissipatorGauge::Dipole, DissipatorGauge::Coulomb}) {
            const DensityTrajectory traj =
                evolve_density_matrix(m, t, build_dissipator(t, sd, g, o), rho0, {0.0, 100.0, 500.0});
            for (const auto& rho : traj.rhos) {
                CHECK((rho - rho0).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("secular gauge invariance of the exchange model trajectory")
{
    GaugeGapOptions o;
    o.secular = true;
    for (double t = 0.0; t <= 500.0; t += 50.0) {
        o.checkpoints.push_back(t);
    }
    const GaugeGapReport r = gauge_gap(exchange_model(0.1), SpectralDensity::free_space(1.0, 0.02), o);
    CHECK(r.trace_distance_max < 1e-10);
    CHECK(r.rate_gap_relative < 1e-12);
    CHECK(r.min_eigenvalue_dipole > -1e-10);
}

TEST_CASE("non-secular gap shrinks with the splitting")
{
    const SpectralDensity sd = SpectralDensity::free_space(1.0, 0.02);
    GaugeGapOptions o;
    o.secular = false;
    const GaugeGapReport a = gauge_gap(exchange_model(0.02), sd, o);
    const GaugeGapReport b = gauge_gap(exchange_model(0.01), sd, o);
    CHECK(b.frequency_spread / a.frequency_spread == doctest::Approx(0.5).epsilon(0.02));
    CHECK(b.rate_gap_relative < a.rate_gap_relative);

    const SpectralDensity flat(PowerLaw{0.0}, 1.0, 0.02);
    const GaugeGapReport narrow = gauge_gap(exchange_model(0.001), flat, o);
    CHECK(narrow.rate_gap_relative == doctest::Approx(0.002).epsilon(0.01));
}

TEST_CASE("non-secular evolution reports rather than clamps")
{
    GaugeGapOptions o;
    o.secular = false;
    o.checkpoints = {0.0, 5.0, 20.0, 100.0};
    const GaugeGapReport r = gauge_gap(exchange_model(0.1), SpectralDensity::free_space(1.0, 0.02), o);
    CHECK(r.trace_distance_max > 0.0);
    CHECK(r.times.size() == 4);
}

TEST_CASE("density-matrix input validation")
{
    const SystemModel m = build_system(kTla, {}, NoCoupling{});
    const TransitionTable t = enumerate_transitions(m);
    const Dissipator d = build_dissipator(t, SpectralDensity::free_space(1.0, 0.02), DissipatorGauge::Dipole);
    Eigen::MatrixXcd bad = basis_density(2, 1) * 2.0;
    CHECK_THROWS_AS(evolve_density_matrix(m, t, d, bad, {1.0}), ValidationError);
    Eigen::MatrixXcd neg = Eigen::MatrixXcd::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK_THROWS_AS(evolve_density_matrix(m, t, d, neg, {1.0}), ValidationError);
}

TEST_CASE("oscillator leakage warning")
{
    const SystemModel m = build_system(kTla, {{1.0, AuxKind::Oscillator, 1}}, ExchangeSpec{{{0, 0.1}}});
    const TransitionTable t = enumerate_transitions(m);
    const Dissipator d = build_dissipator(t, SpectralDensity::free_space(1.0, 0.02), DissipatorGauge::Dipole);
    const DensityTrajectory traj = evolve_density_matrix(m, t, d, excited_vacuum_density(m), {0.0, 10.0});
    CHECK(traj.max_leakage > 1e-3);
    CHECK(traj.warnings.size() == 1);
}
