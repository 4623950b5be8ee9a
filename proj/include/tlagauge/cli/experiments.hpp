// experiments.hpp: named experiments writing CSV artifacts and verification checks

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "tlagauge/cli/checks.hpp"
#include "tlagauge/cli/config.hpp"

namespace tlagauge {

struct ExperimentOutput {
    std::vector<CheckResult> checks;
    YAML::Node summary;
    std::vector<std::string> warnings;
    std::vector<std::string> files; // relative to the output directory
};

// Propagation and integration failures escape as PropagationError and
// IntegrationError.
ExperimentOutput run_experiment(const ExperimentConfig& config, const std::filesystem::path& out_dir);

} // namespace tlagauge
