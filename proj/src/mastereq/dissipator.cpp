#include "tlagauge/mastereq/dissipator.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

#include "tlagauge/errors.hpp"

namespace tlagauge {

namespace {

// Dense rate block of one channel indexed by position in x and y.
Eigen::MatrixXcd channel_rates(const Channel& ch)
{
    const auto n = static_cast<Eigen::Index>(ch.x.size());
    Eigen::MatrixXcd r(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            r(a, b) = ch.x[static_cast<std::size_t>(a)].value * std::conj(ch.y[static_cast<std::size_t>(b)].value);
        }
    }
    return r;
}

} // namespace

std::string to_string(DissipatorGauge g) { return g == DissipatorGauge::Dipole ? "dipole" : "coulomb"; }

std::vector<int> secular_clusters(const TransitionTable& table, double delta_sec)
{
    std::vector<int> id(table.entries.size(), 0);
    int current = 0;
    for (std::size_t a = 1; a < table.entries.size(); ++a) {
        if (table.entries[a].omega - table.entries[a - 1].omega > delta_sec) {
            ++current;
        }
        id[a] = current;
    }
    return id;
}

Dissipator build_dissipator(const TransitionTable& table, const SpectralDensity& sd, DissipatorGauge gauge,
                            const DissipatorOptions& options)
{
    Dissipator d;
    d.gauge = gauge;
    d.secular = options.secular;
    d.delta_sec = options.delta_sec < 0.0 ? table.degeneracy_floor : options.delta_sec;
    d.dim = static_cast<std::size_t>(table.eigenvalues.size());
    const double w0 = table.omega0;

    std::vector<int> cluster(table.entries.size(), 0);
    if (options.secular) {
        cluster = secular_clusters(table, d.delta_sec);
    }
    const int n_channels = table.entries.empty() ? 0 : cluster.back() + 1;
    d.channels.resize(static_cast<std::size_t>(n_channels));

    for (std::size_t a = 0; a < table.entries.size(); ++a) {
        const Transition& e = table.entries[a];
        const double rate = sd(e.omega);
        std::complex<double> x;
        std::complex<double> y;
        if (gauge == DissipatorGauge::Dipole) {
            x = rate * e.c;
            y = e.c;
        } else if (options.route == CoulombRoute::Reduced) {
            x = rate * e.c / e.omega;
            y = e.omega * e.c;
        } else {
            x = rate * (w0 * w0) / (e.omega * e.omega) * e.cp;
            y = e.cp;
        }
        Channel& ch = d.channels[static_cast<std::size_t>(cluster[a])];
        ch.x.push_back({static_cast<int>(a), e.j, e.k, x});
        ch.y.push_back({static_cast<int>(a), e.j, e.k, y});
    }
    return d;
}

void Dissipator::apply_add(const Eigen::MatrixXcd& rho, Eigen::MatrixXcd& out) const
{
    const auto n = rho.rows();
    Eigen::MatrixXcd m(n, n);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
    for (const Channel& ch : channels) {
        // m = X rho, X = sum x_a |j><k|.
        m.setZero();
        for (const JumpEntry& e : ch.x) {
            if (e.value != 0.0) {
                m.row(e.j) += e.value * rho.row(e.k);
            }
        }
        // acc += m Y^dag - Y^dag m, Y^dag = sum conj(y_a) |k><j|.
        for (const JumpEntry& e : ch.y) {
            if (e.value == 0.0) {
                continue;
            }
            const std::complex<double> cy = std::conj(e.value);
            acc.col(e.j) += cy * m.col(e.k);
            acc.row(e.k) -= cy * m.row(e.j);
        }
    }
    out += 0.5 * (acc + acc.adjoint());
}

Eigen::MatrixXcd Dissipator::apply(const Eigen::MatrixXcd& rho) const
{
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    apply_add(rho, out);
    return out;
}

double Dissipator::rate_max() const
{
    double best = 0.0;
    for (const Channel& ch : channels) {
        double mx = 0.0;
        double my = 0.0;
        for (const JumpEntry& e : ch.x) {
            mx = std::max(mx, std::abs(e.value));
        }
        for (const JumpEntry& e : ch.y) {
            my = std::max(my, std::abs(e.value));
        }
        best = std::max(best, mx * my);
    }
    return best;
}

double Dissipator::min_rate_eigenvalue() const
{
    double lowest = 0.0;
    bool first = true;
    for (const Channel& ch : channels) {
        const Eigen::MatrixXcd r = channel_rates(ch);
        const Eigen::MatrixXcd herm = 0.5 * (r + r.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
        const double v = es.eigenvalues().minCoeff();
        lowest = first ? v : std::min(lowest, v);
        first = false;
    }
    return lowest;
}

std::size_t Dissipator::pair_count() const
{
    std::size_t n = 0;
    for (const Channel& ch : channels) {
        n += ch.x.size() * ch.y.size();
    }
    return n;
}

double rate_difference_max(const Dissipator& a, const Dissipator& b)
{
    if (a.channels.size() != b.channels.size()) {
        throw_validation("dissipators have different channel structure");
    }
    double worst = 0.0;
    for (std::size_t c = 0; c < a.channels.size(); ++c) {
        const Channel& ca = a.channels[c];
        const Channel& cb = b.channels[c];
        if (ca.x.size() != cb.x.size()) {
            throw_validation("dissipators have different channel structure");
        }
        for (std::size_t p = 0; p < ca.x.size(); ++p) {
            for (std::size_t q = 0; q < ca.y.size(); ++q) {
                const auto ra = ca.x[p].value * std::conj(ca.y[q].value);
                const auto rb = cb.x[p].value * std::conj(cb.y[q].value);
                worst = std::max(worst, std::abs(ra - rb));
            }
        }
    }
    return worst;
}

double frequency_ratio_spread(const Dissipator& d, const TransitionTable& table, double c_floor)
{
    double worst = 0.0;
    for (const Channel& ch : d.channels) {
        std::vector<double> omegas;
        for (const JumpEntry& e : ch.x) {
            const Transition& t = table.entries[static_cast<std::size_t>(e.alpha)];
            if (std::abs(t.c) > c_floor) {
                omegas.push_back(t.omega);
            }
        }
        if (omegas.size() < 2) {
            continue;
        }
        const auto [lo, hi] = std::minmax_element(omegas.begin(), omegas.end());
        worst = std::max(worst, *hi / *lo - 1.0);
    }
    return worst;
}

} // namespace tlagauge
