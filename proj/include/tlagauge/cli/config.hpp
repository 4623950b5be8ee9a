// config.hpp: strict YAML experiment configuration

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "tlagauge/emission/experiment.hpp"
#include "tlagauge/errors.hpp"
#include "tlagauge/mastereq/gauge_gap.hpp"

namespace tlagauge {

// Schema violation; what() carries "file:line:column: key: message".
class SchemaError : public Error {
public:
    using Error::Error;
};

enum class ExperimentKind { Lineshape, Emission, GaugeCompare, Mastereq, IdentityCheck, GapSweep };

std::string to_string(ExperimentKind kind);
const std::vector<std::pair<std::string, std::string>>& experiment_catalog(); // name, description

struct GaugeConfig {
    GaugeChoice gauge;
    HamiltonianOptions options;
};

struct BathConfig {
    std::size_t modes = 2000;
    Band band;
    QuadratureRule rule = QuadratureRule::UniformGrid;
    SpectralKind density = FreeSpaceCubic{};
};

struct EmissionConfig {
    int max_photons = 1;
    InitialState initial_state = InitialState::Auto;
    double t_final = 0.0;
    std::vector<double> survival_times;
    bool subtract_baseline = true;
    PropagatorOptions propagator;
};

struct LineshapeConfig {
    std::size_t points = 10000;
    Band band;
};

struct CompareConfig {
    GaugeConfig reference;
    GaugeConfig candidate;
    std::optional<double> expect_exponent; // inferred from the candidate gauge when unset
    double tolerance = 0.15;
    ComparisonOptions comparison;
};

struct MastereqConfig {
    std::vector<AuxMode> aux;
    CouplingSpec coupling = NoCoupling{};
    SpectralKind density = FreeSpaceCubic{};
    bool secular = true;
    double delta_sec = -1.0;
    CoulombRoute route = CoulombRoute::Reduced;
    double t_final = 0.0; // 10 / Gamma0 when zero
    int samples = 20;
    std::size_t dim_cap = kDefaultDimCap;
    EvolutionOptions evolution;
};

struct IdentityConfig {
    std::size_t models = 100;
    std::size_t max_dim = 64;
};

struct GapSweepConfig {
    std::vector<double> splittings;
    SpectralKind density = FreeSpaceCubic{};
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Lineshape;
    TlaParams tla = TlaParams::from_decay_rate(1.0, 0.02);
    std::uint64_t seed = 0;
    std::string output;
    BathConfig bath;
    GaugeConfig gauge;
    EmissionConfig emission;
    LineshapeConfig lineshape;
    CompareConfig compare;
    MastereqConfig mastereq;
    IdentityConfig identity;
    GapSweepConfig sweep;
    YAML::Node document; // effective document after overrides
};

// Applies "a.b.c=value" overrides to a parsed document. The value is read as
// YAML, so lists and numbers keep their types.
void apply_override(YAML::Node& document, const std::string& assignment);

// Throws SchemaError for unreadable files, YAML syntax errors, unknown keys,
// wrong types, out-of-range values and option conflicts.
ExperimentConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {},
                             std::optional<std::uint64_t> seed = std::nullopt);
ExperimentConfig parse_config(const YAML::Node& document, const std::string& source,
                              std::optional<std::uint64_t> seed = std::nullopt);

SpectralDensity make_density(const SpectralKind& kind, const TlaParams& tla);

// Derived quantities for operator review: Gamma0, d, xi0, dimensions.
YAML::Node derived_quantities(const ExperimentConfig& config);

} // namespace tlagauge
