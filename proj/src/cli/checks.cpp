#include "tlagauge/cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "tlagauge/emission/hamiltonian.hpp"
#include "tlagauge/emission/propagator.hpp"

namespace tlagauge {

namespace {

std::string fmt(const char* pattern, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, a);
    return buf;
}

std::string sci(double v) { return fmt("%.3e", v); }

CheckResult make(int criterion, std::string name, double measured, double threshold, bool pass,
                 std::string detail = {})
{
    return {criterion, std::move(name), measured, threshold, pass, std::move(detail)};
}

Eigen::MatrixXcd random_density(Eigen::Index n, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            a(i, j) = {normal(rng), normal(rng)};
        }
    }
    Eigen::MatrixXcd rho = a * a.adjoint();
    return rho / rho.trace();
}

std::vector<double> time_grid(double t_final, int intervals)
{
    std::vector<double> t;
    for (int i = 0; i <= intervals; ++i) {
        t.push_back(t_final * i / intervals);
    }
    return t;
}

} // namespace

std::string format_check(const CheckResult& c)
{
    std::string s = c.pass ? "PASS" : "FAIL";
    s += c.criterion > 0 ? " [" + std::to_string(c.criterion) + "] " : " [-] ";
    s += c.name + ": measured " + sci(c.measured) + ", threshold " + sci(c.threshold);
    if (!c.detail.empty()) {
        s += " (" + c.detail + ")";
    }
    return s;
}

std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y)
{
    Eigen::MatrixXd a(static_cast<Eigen::Index>(x.size()), 2);
    Eigen::VectorXd b(static_cast<Eigen::Index>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        a(static_cast<Eigen::Index>(i), 0) = x[i];
        a(static_cast<Eigen::Index>(i), 1) = 1.0;
        b(static_cast<Eigen::Index>(i)) = y[i];
    }
    const Eigen::Vector2d sol = a.colPivHouseholderQr().solve(b);
    return {sol(0), sol(1)};
}

LineshapeErrors lineshape_errors(const Spectrum& s, LineshapeVariant variant, const TlaParams& params,
                                 double core_halfwidth, double band_lo, double band_hi)
{
    LineshapeErrors out;
    out.peak = estimate_peak(s.omegas, s.density);
    const LineshapeModel model{variant, params, out.peak};
    std::vector<double> ref(s.omegas.size());
    double total = 0.0;
    for (std::size_t k = 0; k < ref.size(); ++k) {
        ref[k] = eval_lineshape(model, s.omegas[k]);
        total += ref[k] * s.weights[k];
    }
    for (std::size_t k = 0; k < ref.size(); ++k) {
        const double err = std::abs(s.density[k] / (ref[k] / total) - 1.0);
        if (std::abs(s.omegas[k] - out.peak) <= core_halfwidth) {
            out.core = std::max(out.core, err);
        }
        if (s.omegas[k] >= band_lo && s.omegas[k] <= band_hi) {
            out.band = std::max(out.band, err);
        }
    }
    return out;
}

double ratio_error(const Spectrum& a, const Spectrum& b, double exponent, double omega0, double lo, double hi)
{
    const double pa = estimate_peak(a.omegas, a.density);
    const double pb = estimate_peak(b.omegas, b.density);
    const std::vector<double> shifted = shift_spectrum(b.omegas, b.density, pb - pa);
    double err = 0.0;
    for (std::size_t k = 0; k < a.omegas.size(); ++k) {
        const double w = a.omegas[k];
        if (w < lo || w > hi) {
            continue;
        }
        err = std::max(err, std::abs(a.density[k] / shifted[k] / std::pow(w / omega0, exponent) - 1.0));
    }
    return err;
}

CheckResult check_analytic_ratio(const TlaParams& params, double lo, double hi, std::size_t points)
{
    const LineshapeModel sph{LineshapeVariant::SPh, params};
    const LineshapeModel sphp{LineshapeVariant::SPhPrime, params};
    const double w0 = params.omega0();
    double err = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double w = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        const double target = (w / w0) * (w / w0);
        err = std::max(err, std::abs(eval_lineshape(sph, w) / eval_lineshape(sphp, w) / target - 1.0));
    }
    return make(1, "analytic-ratio", err, 1e-13, err < 1e-13, std::to_string(points) + " points");
}

CheckResult check_markov_normalization(const TlaParams& params)
{
    const LineshapeModel sph{LineshapeVariant::SPh, params};
    const double g = params.gamma0();
    const double w0 = params.omega0();
    const double window = integrate_markov_lineshape(sph, w0 - 20.0 * g, w0 + 20.0 * g);
    const double inf = std::numeric_limits<double>::infinity();
    const double full = integrate_markov_lineshape(sph, -inf, inf);
    const double err = std::max(std::abs(window - 2.0 / kPi * std::atan(40.0)), std::abs(full - 1.0));
    return make(2, "markov-normalization", err, 1e-6, err < 1e-6,
                "window " + fmt("%.10f", window) + ", full line " + fmt("%.12f", full));
}

CheckResult check_decay_oracle(const EmissionResult& run, double gamma0, double tolerance)
{
    double err = 0.0;
    std::string detail;
    for (std::size_t i = 0; i < run.survival_times.size(); ++i) {
        const double e = run.survival[i] / std::exp(-gamma0 * run.survival_times[i]) - 1.0;
        err = std::max(err, std::abs(e));
        detail += (i ? ", " : "") + fmt("t=%g", run.survival_times[i]) + " " + fmt("%+.2e", e);
    }
    return make(3, "decay-oracle", err, tolerance, err < tolerance, detail);
}

CheckResult check_lineshape(int criterion, const std::string& name, const Spectrum& normalized,
                            LineshapeVariant variant, const TlaParams& params)
{
    const double w0 = params.omega0();
    const LineshapeErrors e =
        lineshape_errors(normalized, variant, params, 5.0 * params.gamma0(), 0.8 * w0, 1.2 * w0);
    return make(criterion, name, e.core, 0.02, e.core < 0.02 && e.band < 0.05,
                "|w-peak|<=5G0 error; [0.8,1.2] error " + sci(e.band) + " vs 5.0e-02; peak " + fmt("%.6f", e.peak));
}

CheckResult check_exponent(int criterion, const std::string& name, const GaugeComparison& cmp, double target,
                           double tolerance)
{
    const double dev = std::abs(cmp.exponent - target);
    return make(criterion, name, dev, tolerance, dev <= tolerance,
                "|exponent - " + fmt("%g", target) + "|, exponent " + fmt("%.4f", cmp.exponent) + ", " +
                    std::to_string(cmp.fit_points) + " fit points");
}

SystemModel random_model(std::uint64_t seed, const RandomModelOptions& options)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> freq(0.6, 1.4);
    std::uniform_int_distribution<int> count(0, 5);
    std::uniform_int_distribution<int> trunc(1, 3);
    std::bernoulli_distribution oscillator(0.3);
    const TlaParams tla = TlaParams::from_decay_rate(1.0, 0.02);

    std::vector<AuxMode> aux;
    std::size_t dim = 2;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        AuxMode m{freq(rng), AuxKind::TwoLevel, 1};
        if (oscillator(rng)) {
            m.kind = AuxKind::Oscillator;
            m.truncation = trunc(rng);
        }
        const auto levels = static_cast<std::size_t>(m.levels());
        if (dim * levels <= options.max_dim) {
            aux.push_back(m);
            dim *= levels;
        }
    }
    if (seed % 2 == 0 && !aux.empty()) {
        std::uniform_real_distribution<double> g(0.2 * options.coupling_scale, 2.0 * options.coupling_scale);
        ExchangeSpec spec;
        for (int j = 0; j < static_cast<int>(aux.size()); ++j) {
            spec.terms.push_back({j, g(rng)});
        }
        return build_system(tla, aux, spec, options.max_dim);
    }
    const RandomStructure structure =
        (seed % 4 == 3 && !aux.empty()) ? RandomStructure::AuxOnly : RandomStructure::Full;
    return build_system(tla, aux, RandomHermitianSpec{rng(), options.coupling_scale, structure}, options.max_dim);
}

std::vector<IdentitySample> identity_sweep(std::size_t models, std::uint64_t seed, std::size_t max_dim)
{
    std::vector<IdentitySample> out(models);
    RandomModelOptions opt;
    opt.max_dim = max_dim;
    const auto count = static_cast<std::int64_t>(models);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        IdentitySample& s = out[static_cast<std::size_t>(i)];
        s.seed = seed + static_cast<std::uint64_t>(i);
        const SystemModel m = random_model(s.seed, opt);
        const IdentityReport r = verify_coupling_identity(enumerate_transitions(m));
        s.dim = m.dim;
        s.exchange = std::holds_alternative<ExchangeSpec>(m.v_spec);
        s.transitions = r.residuals.size();
        s.max_residual = r.max_residual;
        s.max_c = r.max_c;
    }
    return out;
}

CheckResult check_coupling_identity(const std::vector<IdentitySample>& samples)
{
    double worst = 0.0;
    std::size_t largest = 0;
    std::size_t exchange = 0;
    std::size_t transitions = 0;
    for (const IdentitySample& s : samples) {
        if (s.max_c > 0.0) {
            worst = std::max(worst, s.max_residual / s.max_c);
        }
        largest = std::max(largest, s.dim);
        exchange += s.exchange ? 1 : 0;
        transitions += s.transitions;
    }
    return make(7, "coupling-identity", worst, 1e-9, worst < 1e-9,
                "max residual / max|c| over " + std::to_string(samples.size()) + " models (" +
                    std::to_string(exchange) + " exchange), " + std::to_string(transitions) +
                    " transitions, max dim " + std::to_string(largest));
}

CheckResult check_coupling_identity(std::size_t models, std::uint64_t seed, std::size_t max_dim)
{
    return check_coupling_identity(identity_sweep(models, seed, max_dim));
}

CheckResult check_secular_report(const GaugeGapReport& r)
{
    return make(8, "secular-gauge-invariance", r.rate_gap_relative, 1e-12,
                r.rate_gap_relative < 1e-12 && r.trace_distance_max < 1e-10,
                "relative rate gap; trajectory trace distance " + sci(r.trace_distance_max) + " vs 1.0e-10");
}

CheckResult check_secular_invariance(double exchange_g, std::size_t random_models, std::uint64_t seed,
                                     const SpectralDensity& sd, double t_final)
{
    std::vector<SystemModel> models;
    models.push_back(build_system(TlaParams::from_decay_rate(sd.reference_frequency(), sd.reference_rate()),
                                  {{sd.reference_frequency(), AuxKind::TwoLevel, 1}},
                                  ExchangeSpec{{{0, exchange_g}}}));
    RandomModelOptions opt;
    opt.max_dim = 16;
    for (std::size_t i = 0; i < random_models; ++i) {
        models.push_back(random_model(seed + i, opt));
    }
    GaugeGapOptions o;
    o.secular = true;
    o.checkpoints = time_grid(t_final, 20);
    double rate_gap = 0.0;
    double distance = 0.0;
    double min_eig = 0.0;
    for (const SystemModel& m : models) {
        const GaugeGapReport r = gauge_gap(m, sd, o);
        rate_gap = std::max(rate_gap, r.rate_gap_relative);
        distance = std::max(distance, r.trace_distance_max);
        min_eig = std::min({min_eig, r.min_eigenvalue_dipole, r.min_eigenvalue_coulomb});
    }
    return make(8, "secular-gauge-invariance", rate_gap, 1e-12, rate_gap < 1e-12 && distance < 1e-10,
                "relative rate gap; trajectory trace distance " + sci(distance) + " vs 1.0e-10 up to t=" +
                    fmt("%g", t_final) + " over " + std::to_string(models.size()) + " models; min eigenvalue " +
                    sci(min_eig));
}

std::vector<GapPoint> gap_sweep(const std::vector<double>& splittings, const SpectralDensity& sd)
{
    const double w0 = sd.reference_frequency();
    const TlaParams tla = TlaParams::from_decay_rate(w0, sd.reference_rate());
    GaugeGapOptions o;
    o.secular = false;
    std::vector<GapPoint> out(splittings.size());
    const auto count = static_cast<std::int64_t>(splittings.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const double delta = splittings[static_cast<std::size_t>(i)];
        const SystemModel m = build_system(tla, {{w0, AuxKind::TwoLevel, 1}}, ExchangeSpec{{{0, 0.5 * delta}}});
        const GaugeGapReport r = gauge_gap(m, sd, o);
        out[static_cast<std::size_t>(i)] = {delta, r.rate_gap_relative, r.frequency_spread};
    }
    return out;
}

CheckResult check_gap_scaling(const std::vector<GapPoint>& points, double omega0)
{
    std::vector<double> lx;
    std::vector<double> ly;
    bool monotone = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        monotone = monotone && (i == 0 || points[i].rate_gap > points[i - 1].rate_gap);
        lx.push_back(std::log(points[i].splitting / omega0));
        ly.push_back(std::log(points[i].rate_gap));
    }
    if (points.size() < 2) {
        return make(9, "nonsecular-gap-scaling", 0.0, 0.2, false, "fewer than two sweep points");
    }
    const double slope = linear_fit(lx, ly).first;
    const double dev = std::abs(slope - 1.0);
    return make(9, "nonsecular-gap-scaling", dev, 0.2, dev <= 0.2 && monotone,
                "|exponent - 1|, exponent " + fmt("%.4f", slope) + ", gap " + sci(points.front().rate_gap) +
                    " at D=" + fmt("%g", points.front().splitting) + " to " + sci(points.back().rate_gap) +
                    " at D=" + fmt("%g", points.back().splitting) + (monotone ? "" : ", not monotone"));
}

CheckResult check_gap_scaling(const std::vector<double>& splittings, const SpectralDensity& sd)
{
    return check_gap_scaling(gap_sweep(splittings, sd), sd.reference_frequency());
}

CheckResult check_conservation(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const TlaParams params = TlaParams::from_decay_rate(1.0, 0.05);
    const SpectralDensity sd = SpectralDensity::free_space(1.0, 0.05);

    double herm = 0.0;
    double rwa_leak = 0.0;
    double norm = 0.0;
    std::size_t hamiltonians = 0;
    const PropagatorOptions prop;
    for (std::size_t n : {3u, 6u, 12u}) {
        const ModeBath bath = discretize(sd, {0.5, 1.5}, n, QuadratureRule::GaussLegendre);
        for (int mp : {1, 2}) {
            const FockBasis basis(n, mp);
            std::vector<std::pair<GaugeChoice, bool>> cases = {
                {GaugeChoice::dipole(), false},        {GaugeChoice::dipole(), true},
                {GaugeChoice::naive_coulomb(), false}, {GaugeChoice::naive_coulomb(), true},
                {GaugeChoice::milonni(), false},       {GaugeChoice::milonni(), true},
                {GaugeChoice::corrected_coulomb(1), false}};
            if (mp == 2) {
                cases.push_back({GaugeChoice::corrected_coulomb(2), false});
                cases.push_back({GaugeChoice::corrected_coulomb(3), false});
            }
            for (const auto& [gauge, rwa] : cases) {
                HamiltonianOptions ho;
                ho.rwa = rwa;
                const GaugeHamiltonian h = assemble_hamiltonian(basis, bath, params, gauge, ho);
                ++hamiltonians;
                herm = std::max(herm, hermiticity_defect(h.op));
                if (rwa) {
                    const CSparse m = h.op.to_sparse();
                    for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
                        const BasisLabel lr = basis.label(static_cast<std::size_t>(r));
                        for (CSparse::InnerIterator it(m, r); it; ++it) {
                            const BasisLabel lc = basis.label(static_cast<std::size_t>(it.col()));
                            if (lr.atom + lr.photons.count() != lc.atom + lc.photons.count()) {
                                rwa_leak = std::max(rwa_leak, std::abs(it.value()));
                            }
                        }
                    }
                }
                std::normal_distribution<double> normal;
                CVec psi(static_cast<Eigen::Index>(basis.dim()));
                for (Eigen::Index i = 0; i < psi.size(); ++i) {
                    psi(i) = {normal(rng), normal(rng)};
                }
                psi.normalize();
                const Trajectory t = propagate(h.op, psi, {10.0, 50.0}, prop);
                for (double d : t.norm_drift) {
                    norm = std::max(norm, d);
                }
            }
        }
    }

    double trace = 0.0;
    double trace_drift = 0.0;
    double rate_neg = 0.0;
    double min_eig = 0.0;
    std::size_t maps = 0;
    RandomModelOptions mo;
    mo.max_dim = 16;
    for (std::uint64_t i = 0; i < 12; ++i) {
        const SystemModel m = random_model(seed + 1000 + i, mo);
        const TransitionTable table = enumerate_transitions(m);
        const Eigen::MatrixXcd rho = random_density(static_cast<Eigen::Index>(m.dim), rng);
        for (bool secular : {true, false}) {
            for (DissipatorGauge g : {DissipatorGauge::Dipole, DissipatorGauge::Coulomb}) {
                DissipatorOptions o;
                o.secular = secular;
                const Dissipator d = build_dissipator(table, sd, g, o);
                ++maps;
                trace = std::max(trace, std::abs(d.apply(rho).trace()));
                const DensityTrajectory traj =
                    evolve_density_matrix(m, table, d, excited_vacuum_density(m), time_grid(100.0, 4));
                for (double x : traj.trace_drift) {
                    trace_drift = std::max(trace_drift, x);
                }
                if (secular) {
                    rate_neg = std::max(rate_neg, -d.min_rate_eigenvalue() / d.rate_max());
                    for (double x : traj.min_eigenvalue) {
                        min_eig = std::min(min_eig, x);
                    }
                }
            }
        }
    }

    const bool pass = herm < 1e-12 && rwa_leak == 0.0 && norm <= prop.tol && trace < 1e-10 && trace_drift < 1e-10 &&
                      rate_neg < 1e-12 && min_eig > -1e-10;
    const double worst = std::max({herm / 1e-12, norm / prop.tol, trace / 1e-10, trace_drift / 1e-10,
                                   rate_neg / 1e-12, -min_eig / 1e-10, rwa_leak > 0.0 ? 2.0 : 0.0});
    return make(10, "conservation-suite", worst, 1.0, pass,
                "worst value / its bound; " + std::to_string(hamiltonians) + " Hamiltonians: hermiticity " +
                    sci(herm) + " < 1e-12, RWA leak " + sci(rwa_leak) + " = 0, norm drift " + sci(norm) +
                    " <= " + sci(prop.tol) + "; " + std::to_string(maps) + " dissipative maps: |tr L rho| " +
                    sci(trace) + " < 1e-10, trajectory trace drift " + sci(trace_drift) +
                    " < 1e-10, secular rate negativity " + sci(rate_neg) + " < 1e-12, secular min eigenvalue " +
                    sci(min_eig) + " > -1e-10");
}

} // namespace tlagauge
