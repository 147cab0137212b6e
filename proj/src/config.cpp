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

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pass
{

using nlohmann::json;

namespace
{

void reject_unknown(const json &j, const std::set<std::string> &allowed, const char *where)
{
    if (!j.is_object())
        throw std::invalid_argument(std::string(where) + ": expected a JSON object");
    for (const auto &item : j.items())
        if (!allowed.count(item.key()))
            throw std::invalid_argument(std::string(where) + ": unknown key '" + item.key() + "'");
}

template <typename T>
void read(const json &j, const char *key, T &out)
{
    if (j.contains(key))
        out = j.at(key).get<T>();
}

json parse_text(std::string_view text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

std::string slurp(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::set<std::string> kScenarioKeys = {
    "carrier_frequency_ghz", "noise_power_dbm",     "users",
    "waveguides",            "antennas_per_waveguide", "service_length_m",
    "service_width_m",       "ceiling_height_m",    "edge_margin_m",
    "waveguide_attenuation_db_per_m", "waveguide_refractive_index", "max_transmit_power_dbm",
    "pinch_length_mm",       "max_antenna_displacement_m", "max_phase_mismatch_rad",
    "mismatch_quant_bits"};

ScenarioConfig scenario_from(const json &j, ScenarioConfig s)
{
    reject_unknown(j, kScenarioKeys, "scenario");
    if (j.contains("carrier_frequency_ghz"))
        s.carrier_frequency_hz = j.at("carrier_frequency_ghz").get<double>() * 1e9;
    read(j, "noise_power_dbm", s.noise_power_dbm);
    read(j, "users", s.users);
    read(j, "waveguides", s.waveguides);
    read(j, "antennas_per_waveguide", s.antennas_per_waveguide);
    read(j, "service_length_m", s.service_length_m);
    read(j, "service_width_m", s.service_width_m);
    read(j, "ceiling_height_m", s.ceiling_height_m);
    read(j, "edge_margin_m", s.edge_margin_m);
    read(j, "waveguide_attenuation_db_per_m", s.attenuation_db_per_m);
    read(j, "waveguide_refractive_index", s.guide_index);
    read(j, "max_transmit_power_dbm", s.max_power_dbm);
    if (j.contains("pinch_length_mm"))
        s.pinch_length_m = j.at("pinch_length_mm").get<double>() * 1e-3;
    if (j.contains("max_antenna_displacement_m"))
    {
        const json &v = j.at("max_antenna_displacement_m");
        if (v.is_null())
            s.max_displacement_m.reset();
        else
            s.max_displacement_m = v.get<double>();
    }
    read(j, "max_phase_mismatch_rad", s.max_phase_mismatch_rad);
    read(j, "mismatch_quant_bits", s.mismatch_quant_bits);
    s.validate();
    return s;
}

const std::set<std::string> kAoKeys = {"max_iterations", "rel_tolerance", "population",      "generations",
                                       "crossover_rate", "mutation_rate", "elites",          "tournament_size",
                                       "wmmse_max_iterations", "wmmse_rel_tolerance", "refine_iterations", "stage_fitness"};

AoParams ao_from(const json &j, AoParams p)
{
    reject_unknown(j, kAoKeys, "ao");
    read(j, "max_iterations", p.max_iterations);
    read(j, "rel_tolerance", p.rel_tolerance);
    read(j, "population", p.ga.population);
    read(j, "generations", p.ga.generations);
    read(j, "crossover_rate", p.ga.crossover_rate);
    read(j, "mutation_rate", p.ga.mutation_rate);
    read(j, "elites", p.ga.elites);
    read(j, "tournament_size", p.ga.tournament_size);
    read(j, "wmmse_max_iterations", p.wmmse.max_iterations);
    read(j, "wmmse_rel_tolerance", p.wmmse.rel_tolerance);
    read(j, "refine_iterations", p.refine_iterations);
    if (j.contains("stage_fitness"))
    {
        const auto mode = j.at("stage_fitness").get<std::string>();
        if (mode == "refreshed")
            p.fitness = StageFitness::refreshed;
        else if (mode == "fixed_precoders")
            p.fitness = StageFitness::fixed_precoders;
        else
            throw std::invalid_argument("ao: unknown stage_fitness '" + mode + "'");
    }
    p.validate();
    return p;
}

} // namespace

ScenarioConfig parse_scenario(std::string_view json_text, const ScenarioConfig &base)
{
    try
    {
        return scenario_from(parse_text(json_text), base);
    }
    catch (const json::exception &e)
    {
        throw std::invalid_argument(std::string("scenario: ") + e.what());
    }
}

std::string scenario_to_json(const ScenarioConfig &s)
{
    json j;
    j["carrier_frequency_ghz"] = s.carrier_frequency_hz * 1e-9;
    j["noise_power_dbm"] = s.noise_power_dbm;
    j["users"] = s.users;
    j["waveguides"] = s.waveguides;
    j["antennas_per_waveguide"] = s.antennas_per_waveguide;
    j["service_length_m"] = s.service_length_m;
    j["service_width_m"] = s.service_width_m;
    j["ceiling_height_m"] = s.ceiling_height_m;
    j["edge_margin_m"] = s.edge_margin_m;
    j["waveguide_attenuation_db_per_m"] = s.attenuation_db_per_m;
    j["waveguide_refractive_index"] = s.guide_index;
    j["max_transmit_power_dbm"] = s.max_power_dbm;
    j["pinch_length_mm"] = s.pinch_length_m * 1e3;
    j["max_antenna_displacement_m"] = s.max_displacement_m ? json(*s.max_displacement_m) : json(nullptr);
    j["max_phase_mismatch_rad"] = s.max_phase_mismatch_rad;
    j["mismatch_quant_bits"] = s.mismatch_quant_bits;
    return j.dump(2);
}

ScenarioConfig load_scenario_file(const std::filesystem::path &path, const ScenarioConfig &base)
{
    return parse_scenario(slurp(path), base);
}

AoParams parse_ao_params(std::string_view json_text, const AoParams &base)
{
    try
    {
        return ao_from(parse_text(json_text), base);
    }
    catch (const json::exception &e)
    {
        throw std::invalid_argument(std::string("ao: ") + e.what());
    }
}

ExperimentSpec parse_experiment(std::string_view json_text)
{
    const json j = parse_text(json_text);
    reject_unknown(j, {"name", "sweep_parameter", "sweep_values", "schemes", "trials", "seed", "scenario", "ao"},
                   "experiment");
    try
    {
        ExperimentSpec spec;
        spec.name = j.at("name").get<std::string>();
        spec.sweep_parameter = parse_sweep_parameter(j.at("sweep_parameter").get<std::string>());
        spec.sweep_values = j.at("sweep_values").get<std::vector<double>>();
        for (const auto &s : j.at("schemes"))
            spec.schemes.push_back(parse_scheme_id(s.get<std::string>()));
        read(j, "trials", spec.trials);
        read(j, "seed", spec.base_seed);
        if (j.contains("scenario"))
            spec.base = scenario_from(j.at("scenario"), spec.base);
        if (j.contains("ao"))
            spec.ao = ao_from(j.at("ao"), spec.ao);
        spec.validate();
        return spec;
    }
    catch (const json::exception &e)
    {
        throw std::invalid_argument(std::string("experiment: ") + e.what());
    }
}

ExperimentSpec load_experiment_file(const std::filesystem::path &path) { return parse_experiment(slurp(path)); }

std::vector<std::string> preset_names() { return {"fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10"}; }

std::vector<ExperimentSpec> preset(std::string_view name, const PresetScale &scale, const ScenarioConfig &base,
                                   std::uint64_t seed)
{
    using enum SchemeId;
    auto make = [&](std::string exp_name, SweepParameter p, std::vector<double> values, std::vector<SchemeId> schemes,
                    ScenarioConfig s) {
        ExperimentSpec e;
        e.name = std::move(exp_name);
        e.sweep_parameter = p;
        e.sweep_values = std::move(values);
        e.schemes = std::move(schemes);
        e.trials = scale.trials;
        e.base_seed = seed;
        e.base = std::move(s);
        e.ao.ga.population = scale.population;
        e.ao.ga.generations = scale.generations;
        return e;
    };
    const std::vector<double> powers = {-10, -5, 0, 5, 10, 15, 20};
    const std::vector<double> lengths = {50, 75, 100, 125, 150};

    std::vector<ExperimentSpec> out;
    if (name == "fig4")
        out.push_back(make("fig4", SweepParameter::p_max_dbm, powers, {AT, DAC, MOV, FIXED_PASS, MISO}, base));
    else if (name == "fig5")
        out.push_back(make("fig5", SweepParameter::deployment_dz, lengths, {AT, DAC, MOV, FIXED_PASS, MISO}, base));
    else if (name == "fig6")
        out.push_back(make("fig6", SweepParameter::n_waveguides, {2, 4, 6, 8, 10}, {AT, MOV, FIXED_PASS, MISO}, base));
    else if (name == "fig7")
    {
        ScenarioConfig s = base;
        s.waveguides = 10;
        out.push_back(make("fig7", SweepParameter::n_users, {2, 4, 6, 8, 10}, {AT, MOV, FIXED_PASS, MISO}, s));
    }
    else if (name == "fig8")
    {
        for (double alpha : {0.0, 0.08, 0.2})
        {
            ScenarioConfig s = base;
            s.attenuation_db_per_m = alpha;
            char label[32];
            std::snprintf(label, sizeof label, "fig8_alpha%g", alpha);
            out.push_back(make(label, SweepParameter::deployment_dz, lengths, {AT, MOV, MISO}, s));
        }
    }
    else if (name == "fig9")
    {
        for (int bits : {0, 2, 6, 10})
        {
            ScenarioConfig s = base;
            s.mismatch_quant_bits = bits;
            std::vector<SchemeId> schemes = {AT};
            if (bits == 0)
                schemes.push_back(MISO);
            out.push_back(make(bits == 0 ? "fig9_continuous" : "fig9_nq" + std::to_string(bits),
                               SweepParameter::p_max_dbm, powers, schemes, s));
        }
    }
    else if (name == "fig10")
    {
        for (double dn : {0.0, 0.1, 0.2, 0.3})
        {
            ScenarioConfig s = apply_sweep(base, SweepParameter::delta_n, dn);
            char label[32];
            std::snprintf(label, sizeof label, "fig10_dn%g", dn);
            out.push_back(make(dn == 0.0 ? "fig10_ideal" : label, SweepParameter::p_max_dbm, powers, {AT}, s));
        }
    }
    else
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    return out;
}

} // namespace pass
