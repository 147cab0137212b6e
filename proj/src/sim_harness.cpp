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

#include "pass/sim_harness.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace pass
{

std::string_view to_string(SchemeId s)
{
    switch (s)
    {
    case SchemeId::AT:
        return "AT";
    case SchemeId::DAC:
        return "DAC";
    case SchemeId::MOV:
        return "MOV";
    case SchemeId::FIXED_PASS:
        return "FIXED_PASS";
    case SchemeId::MISO:
        return "MISO";
    }
    return "?";
}

SchemeId parse_scheme_id(std::string_view name)
{
    for (SchemeId s : {SchemeId::AT, SchemeId::DAC, SchemeId::MOV, SchemeId::FIXED_PASS, SchemeId::MISO})
        if (to_string(s) == name)
            return s;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

std::optional<Scheme> ga_scheme(SchemeId s)
{
    switch (s)
    {
    case SchemeId::AT:
        return Scheme::AT;
    case SchemeId::DAC:
        return Scheme::DAC;
    case SchemeId::MOV:
        return Scheme::MOV;
    default:
        return std::nullopt;
    }
}

namespace
{
constexpr SweepParameter kAllSweeps[] = {SweepParameter::p_max_dbm,    SweepParameter::deployment_dz,
                                         SweepParameter::n_waveguides, SweepParameter::n_users,
                                         SweepParameter::attenuation,  SweepParameter::quant_bits,
                                         SweepParameter::delta_n};
} // namespace

std::string_view to_string(SweepParameter p)
{
    switch (p)
    {
    case SweepParameter::p_max_dbm:
        return "p_max_dbm";
    case SweepParameter::deployment_dz:
        return "deployment_dz";
    case SweepParameter::n_waveguides:
        return "n_waveguides";
    case SweepParameter::n_users:
        return "n_users";
    case SweepParameter::attenuation:
        return "attenuation";
    case SweepParameter::quant_bits:
        return "quant_bits";
    case SweepParameter::delta_n:
        return "delta_n";
    }
    return "?";
}

SweepParameter parse_sweep_parameter(std::string_view name)
{
    for (SweepParameter p : kAllSweeps)
        if (to_string(p) == name)
            return p;
    throw std::invalid_argument("unknown sweep parameter '" + std::string(name) + "'");
}

void ExperimentSpec::validate() const
{
    if (name.empty())
        throw std::invalid_argument("ExperimentSpec: name must not be empty");
    if (trials < 1)
        throw std::invalid_argument("ExperimentSpec: trials must be at least 1");
    if (sweep_values.empty())
        throw std::invalid_argument("ExperimentSpec: sweep_values must not be empty");
    if (schemes.empty())
        throw std::invalid_argument("ExperimentSpec: at least one scheme is required");
    ao.validate();
    for (double v : sweep_values)
        apply_sweep(base, sweep_parameter, v).validate();
}

UserSet sample_users(const ScenarioConfig &s, Rng &rng)
{
    std::uniform_real_distribution<double> ux(0.0, s.service_width_m);
    std::uniform_real_distribution<double> uz(s.edge_margin_m, s.edge_margin_m + s.service_length_m);
    UserSet users;
    users.positions.reserve(static_cast<std::size_t>(s.users));
    for (int k = 0; k < s.users; ++k)
    {
        const double x = ux(rng);
        const double z = uz(rng);
        users.positions.push_back({x, 0.0, z});
    }
    return users;
}

double baseline_fixed_pass(const UserSet &users, const ScenarioConfig &s, const CouplerDesign &d,
                           const WmmseOptions &options)
{
    const FitnessEvaluator evaluator(users, s, d);
    AoParams p;
    p.wmmse = options;
    return evaluate_jointly(neutral_chromosome(Scheme::DAC, s, d), evaluator, p).sum_rate;
}

std::vector<Vec3> miso_positions(const ScenarioConfig &s)
{
    const double half = 0.5 * s.wavelength();
    const int nx = s.waveguides;
    const int nz = s.antennas_per_waveguide;
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(nx * nz));
    for (int p = 0; p < nx; ++p)
        for (int q = 0; q < nz; ++q)
            out.push_back({0.5 * s.service_width_m + (p - 0.5 * (nx - 1)) * half, s.ceiling_height_m, q * half});
    return out;
}

double baseline_miso(const UserSet &users, const ScenarioConfig &s, const WmmseOptions &options)
{
    const EffectiveChannels c = channel_rows(users, miso_positions(s), s.wavelength());
    const WmmseResult r = wmmse_solve(c, s.max_power_mw(), s.noise_mw(), std::nullopt, options);
    return sum_rate(c, r.precoders, s.noise_mw());
}

double material_cap(double delta_n, const ScenarioConfig &s, double pinch_length_m)
{
    if (!(delta_n > 0.0))
        throw std::invalid_argument("material_cap: delta_n must be positive");
    return std::min(s.wavenumber() * delta_n * pinch_length_m, kMaxNormalizedMismatch);
}

ScenarioConfig apply_sweep(ScenarioConfig s, SweepParameter p, double value)
{
    const auto as_count = [&](const char *what) {
        const double r = std::round(value);
        if (std::abs(r - value) > 1e-9 || r < 0.0)
            throw std::invalid_argument(std::string("sweep value for ") + what + " must be a non-negative integer");
        return static_cast<int>(r);
    };
    switch (p)
    {
    case SweepParameter::p_max_dbm:
        s.max_power_dbm = value;
        break;
    case SweepParameter::deployment_dz:
        s.service_length_m = value - 2.0 * s.edge_margin_m;
        s.max_displacement_m.reset();
        break;
    case SweepParameter::n_waveguides:
        s.waveguides = as_count("n_waveguides");
        break;
    case SweepParameter::n_users:
        s.users = as_count("n_users");
        break;
    case SweepParameter::attenuation:
        s.attenuation_db_per_m = value;
        break;
    case SweepParameter::quant_bits:
        s.mismatch_quant_bits = as_count("quant_bits");
        break;
    case SweepParameter::delta_n:
        // 0 selects the unconstrained range
        s.max_phase_mismatch_rad = value > 0.0 ? material_cap(value, s, s.pinch_length_m) : kMaxNormalizedMismatch;
        break;
    }
    return s;
}

namespace
{
std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}
} // namespace

std::uint64_t trial_seed(std::uint64_t base_seed, int trial_index)
{
    return base_seed + static_cast<std::uint64_t>(trial_index);
}

TrialResult run_trial(SchemeId scheme, const ScenarioConfig &s, const AoParams &ao, std::uint64_t seed)
{
    s.validate();
    const auto start = std::chrono::steady_clock::now();

    // Users depend on the seed only, so every scheme sees the same deployment.
    Rng user_rng(splitmix64(seed));
    const UserSet users = sample_users(s, user_rng);
    const CouplerDesign d = coupler_for(s);

    TrialResult r;
    r.scheme = scheme;
    r.seed = seed;
    if (const auto ga = ga_scheme(scheme))
        r.sum_rate_bps_hz = optimize(*ga, users, s, d, ao, splitmix64(seed ^ 0x5A17C0DEull)).sum_rate;
    else if (scheme == SchemeId::FIXED_PASS)
        r.sum_rate_bps_hz = baseline_fixed_pass(users, s, d, ao.wmmse);
    else
        r.sum_rate_bps_hz = baseline_miso(users, s, ao.wmmse);

    r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

ExperimentOutput run_experiment(const ExperimentSpec &spec, int threads)
{
    spec.validate();

    std::vector<TrialResult> tasks;
    for (SchemeId scheme : spec.schemes)
        for (double value : spec.sweep_values)
            for (int t = 0; t < spec.trials; ++t)
            {
                TrialResult r;
                r.experiment = spec.name;
                r.scheme = scheme;
                r.sweep_parameter = spec.sweep_parameter;
                r.sweep_value = value;
                r.trial_index = t;
                r.seed = trial_seed(spec.base_seed, t);
                tasks.push_back(std::move(r));
            }
    std::sort(tasks.begin(), tasks.end(), [](const TrialResult &a, const TrialResult &b) {
        return std::tie(a.scheme, a.sweep_value, a.trial_index) < std::tie(b.scheme, b.sweep_value, b.trial_index);
    });

    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;)
        {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            TrialResult &task = tasks[i];
            try
            {
                const ScenarioConfig s = apply_sweep(spec.base, spec.sweep_parameter, task.sweep_value);
                const TrialResult r = run_trial(task.scheme, s, spec.ao, task.seed);
                task.sum_rate_bps_hz = r.sum_rate_bps_hz;
                task.wall_time_s = r.wall_time_s;
            }
            catch (const std::exception &e)
            {
                errors[i] = std::make_exception_ptr(TrialError(
                    "trial failed (experiment " + spec.name + ", scheme " + std::string(to_string(task.scheme)) +
                    ", " + std::string(to_string(spec.sweep_parameter)) + " = " + std::to_string(task.sweep_value) +
                    ", seed " + std::to_string(task.seed) + "): " + e.what()));
            }
        }
    };

    const int count = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
    if (count == 1)
        worker();
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t)
            pool.emplace_back(worker);
    }

    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);

    ExperimentOutput out;
    out.trials = std::move(tasks);
    out.summary = summarize(out.trials);
    return out;
}

std::vector<SummaryRow> summarize(const std::vector<TrialResult> &trials)
{
    std::vector<SummaryRow> out;
    std::size_t begin = 0;
    while (begin < trials.size())
    {
        std::size_t end = begin;
        while (end < trials.size() && trials[end].experiment == trials[begin].experiment &&
               trials[end].scheme == trials[begin].scheme && trials[end].sweep_value == trials[begin].sweep_value)
            ++end;

        const auto n = static_cast<double>(end - begin);
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i)
            sum += trials[i].sum_rate_bps_hz;
        const double mean = sum / n;

        double half_width = 0.0;
        if (end - begin > 1)
        {
            double ss = 0.0;
            for (std::size_t i = begin; i < end; ++i)
                ss += (trials[i].sum_rate_bps_hz - mean) * (trials[i].sum_rate_bps_hz - mean);
            const double sd = std::sqrt(ss / (n - 1.0));
            const boost::math::students_t dist(n - 1.0);
            half_width = boost::math::quantile(dist, 0.975) * sd / std::sqrt(n);
        }

        SummaryRow row;
        row.experiment = trials[begin].experiment;
        row.scheme = trials[begin].scheme;
        row.sweep_parameter = trials[begin].sweep_parameter;
        row.sweep_value = trials[begin].sweep_value;
        row.trials = static_cast<int>(end - begin);
        row.mean_rate = mean;
        row.ci95_low = mean - half_width;
        row.ci95_high = mean + half_width;
        out.push_back(std::move(row));
        begin = end;
    }
    return out;
}

namespace
{
std::string fmt(double v, const char *spec)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}
} // namespace

void write_trials_csv(std::ostream &os, const std::vector<TrialResult> &trials)
{
    os << kTrialsHeader << '\n';
    for (const auto &t : trials)
        os << t.experiment << ',' << to_string(t.scheme) << ',' << to_string(t.sweep_parameter) << ','
           << fmt(t.sweep_value, "%.10g") << ',' << t.trial_index << ',' << t.seed << ','
           << fmt(t.sum_rate_bps_hz, "%.15g") << ',' << fmt(t.wall_time_s, "%.6f") << '\n';
}

void write_summary_csv(std::ostream &os, const std::vector<SummaryRow> &summary)
{
    os << kSummaryHeader << '\n';
    for (const auto &r : summary)
        os << r.experiment << ',' << to_string(r.scheme) << ',' << to_string(r.sweep_parameter) << ','
           << fmt(r.sweep_value, "%.10g") << ',' << r.trials << ',' << fmt(r.mean_rate, "%.15g") << ','
           << fmt(r.ci95_low, "%.15g") << ',' << fmt(r.ci95_high, "%.15g") << '\n';
}

} // namespace pass
