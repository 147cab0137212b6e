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

#include "pass/config.hpp"

#include <catch_amalgamated.hpp>

using namespace pass;

TEST_CASE("scenario keys map onto the configuration")
{
    const auto s = parse_scenario(R"({"carrier_frequency_ghz": 30, "users": 4, "waveguides": 3,
        "pinch_length_mm": 20, "waveguide_attenuation_db_per_m": 0.2, "max_antenna_displacement_m": null,
        "mismatch_quant_bits": 6})");
    CHECK(s.carrier_frequency_hz == 30e9);
    CHECK(s.users == 4);
    CHECK(s.waveguides == 3);
    CHECK(s.pinch_length_m == 0.02);
    CHECK(s.attenuation_db_per_m == 0.2);
    CHECK_FALSE(s.max_displacement_m.has_value());
    CHECK(s.mismatch_quant_bits == 6);
    CHECK(s.noise_power_dbm == -110.0);
}

TEST_CASE("scenario round trip")
{
    ScenarioConfig s;
    s.users = 7;
    s.max_power_dbm = 3.5;
    const auto back = parse_scenario(scenario_to_json(s));
    CHECK(back.users == 7);
    CHECK(back.max_power_dbm == 3.5);
    CHECK(back.max_displacement_m == s.max_displacement_m);
    CHECK(back.carrier_frequency_hz == s.carrier_frequency_hz);
}

TEST_CASE("bad documents are rejected")
{
    CHECK_THROWS_AS(parse_scenario(R"({"user": 3})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario(R"({"users": 0})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("[1, 2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ao_params(R"({"stage_fitness": "exact"})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ao_params(R"({"population": "many"})"), std::invalid_argument);
}

TEST_CASE("AO parameters")
{
    const auto p = parse_ao_params(R"({"population": 30, "generations": 5, "elites": 2,
        "stage_fitness": "fixed_precoders", "wmmse_max_iterations": 50})");
    CHECK(p.ga.population == 30);
    CHECK(p.ga.generations == 5);
    CHECK(p.ga.elites == 2);
    CHECK(p.fitness == StageFitness::fixed_precoders);
    CHECK(p.wmmse.max_iterations == 50);
}

TEST_CASE("experiment document")
{
    const auto e = parse_experiment(R"({"name": "pw", "sweep_parameter": "p_max_dbm",
        "sweep_values": [0, 10], "schemes": ["AT", "MISO"], "trials": 4, "seed": 9,
        "scenario": {"users": 3}, "ao": {"generations": 2}})");
    CHECK(e.name == "pw");
    CHECK(e.sweep_values == std::vector<double>{0.0, 10.0});
    CHECK(e.schemes == std::vector<SchemeId>{SchemeId::AT, SchemeId::MISO});
    CHECK(e.trials == 4);
    CHECK(e.base_seed == 9);
    CHECK(e.base.users == 3);
    CHECK(e.ao.ga.generations == 2);
    CHECK_THROWS_AS(parse_experiment(R"({"name": "x", "sweep_parameter": "p_max_dbm", "sweep_values": [],
        "schemes": ["AT"]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_experiment(R"({"name": "x", "sweep_parameter": "p_max_dbm", "sweep_values": [1],
        "schemes": ["AT"], "extra": 1})"),
                    std::invalid_argument);
}

TEST_CASE("figure presets")
{
    const auto names = preset_names();
    CHECK(names.size() == 7);
    for (const auto &n : names)
    {
        const auto specs = preset(n, PresetScale::desk(), {}, 1);
        REQUIRE_FALSE(specs.empty());
        for (const auto &s : specs)
        {
            CHECK_NOTHROW(s.validate());
            CHECK(s.trials == 50);
            CHECK(s.ao.ga.population == 40);
            CHECK(s.ao.ga.generations == 60);
        }
    }
    const auto fig8 = preset("fig8", PresetScale::full(), {}, 1);
    CHECK(fig8.size() == 3);
    CHECK(fig8[0].trials == 500);
    CHECK_THROWS_AS(preset("fig11", PresetScale::desk(), {}, 1), std::invalid_argument);
}
