// SPDX-License-Identifier: Apache-2.0
//
// pass-sim: amplitude-tunable pinching-antenna system simulator
// Copyright (C) 2026 The pass-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef PASS_CONFIG_HPP
#define PASS_CONFIG_HPP

#include "pass/sim_harness.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pass
{

// JSON documents. Scenario keys follow the simulation-parameter table:
//   carrier_frequency_ghz, noise_power_dbm, users, waveguides, antennas_per_waveguide,
//   service_length_m, service_width_m, ceiling_height_m, edge_margin_m,
//   waveguide_attenuation_db_per_m, waveguide_refractive_index, max_transmit_power_dbm,
//   pinch_length_mm, max_antenna_displacement_m (null = d_z - lambda/2),
//   max_phase_mismatch_rad, mismatch_quant_bits
// Unknown keys are rejected.

ScenarioConfig parse_scenario(std::string_view json_text, const ScenarioConfig &base = {});
std::string scenario_to_json(const ScenarioConfig &s);
ScenarioConfig load_scenario_file(const std::filesystem::path &path, const ScenarioConfig &base = {});

AoParams parse_ao_params(std::string_view json_text, const AoParams &base = {});

/// Experiment document: name, sweep_parameter, sweep_values, schemes, trials, seed, scenario{}, ao{}.
ExperimentSpec parse_experiment(std::string_view json_text);
ExperimentSpec load_experiment_file(const std::filesystem::path &path);

struct PresetScale
{
    int trials = 50;
    int population = 40;
    int generations = 60;

    static PresetScale desk() { return {}; }
    static PresetScale full() { return {500, 100, 200}; }
};

std::vector<std::string> preset_names();

/// Experiments reproducing one figure (fig4 ... fig10). Throws for unknown names.
std::vector<ExperimentSpec> preset(std::string_view name, const PresetScale &scale, const ScenarioConfig &base,
                                   std::uint64_t seed);

} // namespace pass

#endif
