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
#include "pass/sim_harness.hpp"
#include "pass/validation.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace
{

int write_outputs(const pass::ExperimentSpec &spec, const pass::ExperimentOutput &out,
                  const std::filesystem::path &dir)
{
    std::filesystem::create_directories(dir);
    const auto trials_path = dir / (spec.name + "_trials.csv");
    const auto summary_path = dir / (spec.name + "_summary.csv");
    std::ofstream trials(trials_path), summary(summary_path);
    if (!trials || !summary)
    {
        std::cerr << "error: cannot write to " << dir << "\n";
        return 1;
    }
    pass::write_trials_csv(trials, out.trials);
    pass::write_summary_csv(summary, out.summary);

    for (const auto &row : out.summary)
        std::cout << spec.name << "  " << pass::to_string(row.scheme) << "  " << pass::to_string(row.sweep_parameter)
                  << "=" << row.sweep_value << "  mean " << row.mean_rate << " bps/Hz  [" << row.ci95_low << ", "
                  << row.ci95_high << "]\n";
    std::cout << "wrote " << trials_path.string() << " and " << summary_path.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Pinching-antenna system simulator: AT/DAC/MOV optimization and baselines"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::string out_dir = "results";
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string config_file;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--seed", seed, "Base seed; trial i uses seed + i");
        cmd->add_option("--out", out_dir, "Output directory for CSV files");
        cmd->add_option("--threads", threads, "Concurrent trials")->check(CLI::PositiveNumber);
        cmd->add_option("--config", config_file, "Scenario JSON overriding the defaults")->check(CLI::ExistingFile);
    };

    auto *run = app.add_subcommand("run", "Run one experiment file");
    std::string spec_file;
    run->add_option("spec", spec_file, "Experiment JSON")->required()->check(CLI::ExistingFile);
    add_common(run);

    auto *sweep = app.add_subcommand("sweep", "Run a built-in figure preset");
    std::string preset_name;
    int trials = -1, pop = -1, gens = -1;
    bool full = false;
    sweep->add_option("preset", preset_name, "fig4 ... fig10")->required();
    sweep->add_option("--trials", trials, "Monte-Carlo trials per point");
    sweep->add_option("--pop", pop, "GA population");
    sweep->add_option("--gens", gens, "GA generations per AO iteration");
    sweep->add_flag("--full", full, "Full scale (500 trials, population 100, 200 generations)");
    add_common(sweep);

    auto *validate = app.add_subcommand("validate", "Run the property suite");
    add_common(validate);

    auto *oracle = app.add_subcommand("oracle", "RK4 vs closed-form coupled-mode report");
    int steps = 10000;
    oracle->add_option("--steps", steps, "RK4 steps over the antenna length")->check(CLI::Range(1000, 10000000));

    CLI11_PARSE(app, argc, argv);

    try
    {
        pass::ScenarioConfig base;
        if (!config_file.empty())
            base = pass::load_scenario_file(config_file, base);

        if (*run)
        {
            pass::ExperimentSpec spec = pass::load_experiment_file(spec_file);
            if (!config_file.empty())
                spec.base = base;
            if (run->count("--seed"))
                spec.base_seed = seed;
            return write_outputs(spec, pass::run_experiment(spec, threads), out_dir);
        }
        if (*sweep)
        {
            pass::PresetScale scale = full ? pass::PresetScale::full() : pass::PresetScale::desk();
            if (trials > 0)
                scale.trials = trials;
            if (pop > 0)
                scale.population = pop;
            if (gens >= 0)
                scale.generations = gens;
            for (const auto &spec : pass::preset(preset_name, scale, base, seed))
                if (int rc = write_outputs(spec, pass::run_experiment(spec, threads), out_dir); rc != 0)
                    return rc;
            return 0;
        }
        if (*validate)
        {
            bool ok = true;
            for (const auto &r : pass::run_property_suite(seed))
            {
                std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
                ok = ok && r.passed;
            }
            if (!ok)
            {
                std::cerr << "validation failed\n";
                return 1;
            }
            return 0;
        }
        if (*oracle)
        {
            std::cout << pass::oracle_report(steps);
            return 0;
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
