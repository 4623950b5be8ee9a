#include "tlagauge/core/spectral_density.hpp"

#include <algorithm>
#include <cmath>

#include "tlagauge/errors.hpp"

namespace tlagauge {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate_table(const Tabulated& table)
{
    if (table.samples.empty()) {
        throw_validation("tabulated spectral density has no samples");
    }
    for (std::size_t i = 0; i < table.samples.size(); ++i) {
        const auto& [omega, rate] = table.samples[i];
        if (!std::isfinite(omega) || !std::isfinite(rate) || rate < 0.0) {
            throw_validation("tabulated spectral density sample " + std::to_string(i) +
                             " is not a finite nonnegative rate");
        }
        if (i > 0 && !(omega > table.samples[i - 1].first)) {
            throw_validation("tabulated spectral density frequencies must be strictly increasing (sample " +
                             std::to_string(i) + ")");
        }
    }
}

} // namespace

SpectralDensity::SpectralDensity(SpectralKind kind, double reference_frequency, double reference_rate)
    : kind_(std::move(kind)), reference_frequency_(reference_frequency), reference_rate_(reference_rate)
{
    if (!(reference_frequency > 0.0)) {
        throw_domain("spectral density reference frequency must be positive");
    }
    if (!(reference_rate >= 0.0)) {
        throw_domain("spectral density reference rate must be nonnegative");
    }
    if (const auto* table = std::get_if<Tabulated>(&kind_)) {
        validate_table(*table);
    }
}

double SpectralDensity::operator()(double omega) const
{
    if (!(omega > 0.0)) {
        return 0.0;
    }
    const double x = omega / reference_frequency_;
    return std::visit(
        Overloaded{
            [&](const FreeSpaceCubic&) { return reference_rate_ * x * x * x; },
            [&](const PowerLaw& p) { return reference_rate_ * std::pow(x, p.exponent); },
            [&](const Tabulated& t) {
                const auto& s = t.samples;
                if (omega < s.front().first || omega > s.back().first) {
                    return 0.0;
                }
                if (s.size() == 1) {
                    return s.front().second;
                }
                auto hi = std::lower_bound(s.begin(), s.end(), omega,
                                           [](const auto& sample, double w) { return sample.first < w; });
                if (hi == s.begin()) {
                    return hi->second;
                }
                auto lo = std::prev(hi);
                const double frac = (omega - lo->first) / (hi->first - lo->first);
                return lo->second + frac * (hi->second - lo->second);
            },
        },
        kind_);
}

} // namespace tlagauge
