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

#ifndef PASS_SIM_HARNESS_HPP
#define PASS_SIM_HARNESS_HPP

#include "pass/ao_engine.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pass
{

/// Everything a trial can run: the three GA schemes plus the two baselines.
enum class SchemeId
{
    AT,
    DAC,
    MOV,
    FIXED_PASS,
    MISO
};

std::string_view to_string(SchemeId s);
SchemeId parse_scheme_id(std::string_view name);
std::optional<Scheme> ga_scheme(SchemeId s);

enum class SweepParameter
{
    p_max_dbm,
    deployment_dz,
    n_waveguides,
    n_users,
    attenuation,
    quant_bits,
    delta_n
};

std::string_view to_string(SweepParameter p);
SweepParameter parse_sweep_parameter(std::string_view name);

struct ExperimentSpec
{
    std::string name;
    SweepParameter sweep_parameter = SweepParameter::p_max_dbm;
    std::vector<double> sweep_values;
    std::vector<SchemeId> schemes;
    int trials = 1;
    std::uint64_t base_seed = 0;
    ScenarioConfig base;
    AoParams ao;

    void validate() const;
};

struct TrialResult
{
    std::string experiment;
    SchemeId scheme = SchemeId::AT;
    SweepParameter sweep_parameter = SweepParameter::p_max_dbm;
    double sweep_value = 0.0;
    int trial_index = 0;
    std::uint64_t seed = 0;
    double sum_rate_bps_hz = 0.0;
    double wall_time_s = 0.0;
};

struct SummaryRow
{
    std::string experiment;
    SchemeId scheme = SchemeId::AT;
    SweepParameter sweep_parameter = SweepParameter::p_max_dbm;
    double sweep_value = 0.0;
    int trials = 0;
    double mean_rate = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
};

struct ExperimentOutput
{
    std::vector<TrialResult> trials; // sorted by (scheme, sweep value, trial)
    std::vector<SummaryRow> summary;
};

/// Raised when a trial fails; the message carries scheme, sweep value and seed.
class TrialError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// K users uniform over [0, S_x] x {0} x [D_0, D_0 + S_z].
UserSet sample_users(const ScenarioConfig &s, Rng &rng);

/// All antennas active with equal-power mismatches at nominal positions, WMMSE precoders.
double baseline_fixed_pass(const UserSet &users, const ScenarioConfig &s, const CouplerDesign &d,
                           const WmmseOptions &options = {});

/// Element positions of the lambda/2 planar array at the feed end (N_x = N_w, N_z = N_a).
std::vector<Vec3> miso_positions(const ScenarioConfig &s);

/// Fully digital lambda/2 array with WMMSE precoding.
double baseline_miso(const UserSet &users, const ScenarioConfig &s, const WmmseOptions &options = {});

/// Maximum normalized mismatch reachable with an index swing delta_n: min(k0 delta_n L0, pi*sqrt(3)).
double material_cap(double delta_n, const ScenarioConfig &s, double pinch_length_m);

/// Copy of the scenario with one sweep parameter set.
ScenarioConfig apply_sweep(ScenarioConfig s, SweepParameter p, double value);

std::uint64_t trial_seed(std::uint64_t base_seed, int trial_index);

TrialResult run_trial(SchemeId scheme, const ScenarioConfig &s, const AoParams &ao, std::uint64_t seed);

ExperimentOutput run_experiment(const ExperimentSpec &spec, int threads = 1);

std::vector<SummaryRow> summarize(const std::vector<TrialResult> &trials);

inline constexpr std::string_view kTrialsHeader =
    "experiment,scheme,sweep_parameter,sweep_value,trial,seed,sum_rate_bps_hz,wall_time_s";
inline constexpr std::string_view kSummaryHeader =
    "experiment,scheme,sweep_parameter,sweep_value,trials,mean_rate,ci95_low,ci95_high";

void write_trials_csv(std::ostream &os, const std::vector<TrialResult> &trials);
void write_summary_csv(std::ostream &os, const std::vector<SummaryRow> &summary);

} // namespace pass

#endif
