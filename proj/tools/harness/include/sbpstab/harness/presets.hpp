#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sbpstab/harness/config.hpp"
#include "sbpstab/harness/runs.hpp"

namespace sbpstab::harness {

/// Named experiment configurations compiled into the binary.
const std::vector<ExperimentConfig>& presets();
std::optional<ExperimentConfig> find_preset(std::string_view name);

/// Named sweeps over the density-wave matrix.
const std::vector<SweepSpec>& sweep_presets();
std::optional<SweepSpec> find_sweep_preset(std::string_view name);

}  // namespace sbpstab::harness
