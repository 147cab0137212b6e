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

#include "pass/ao_engine.hpp"
#include "pass/sim_harness.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace pass;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

ScenarioConfig small_scenario()
{
    ScenarioConfig s;
    s.users = 3;
    s.waveguides = 3;
    s.antennas_per_waveguide = 3;
    return s;
}

AoParams quick_params()
{
    AoParams p;
    p.max_iterations = 4;
    p.ga.population = 12;
    p.ga.generations = 8;
    return p;
}

UserSet users_for(const ScenarioConfig &s, std::uint64_t seed)
{
    Rng rng(seed);
    return sample_users(s, rng);
}

} // namespace

TEST_CASE("AO parameter validation")
{
    AoParams p;
    CHECK_NOTHROW(p.validate());
    p.max_iterations = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.rel_tolerance = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = {};
    p.refine_iterations = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.fitness = StageFitness::fixed_precoders;
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("no GA generations reproduces the fixed baseline")
{
    const ScenarioConfig s = small_scenario();
    const auto d = coupler_for(s);
    AoParams p = quick_params();
    p.ga.generations = 0;
    for (std::uint64_t seed : {1u, 2u, 3u})
    {
        const UserSet users = users_for(s, seed);
        for (Scheme scheme : {Scheme::AT, Scheme::DAC, Scheme::MOV})
        {
            const auto r = optimize(scheme, users, s, d, p, seed);
            CHECK(r.sum_rate == baseline_fixed_pass(users, s, d, p.wmmse));
            CHECK(r.iterations_used == 0);
            CHECK(r.rate_trajectory.size() == 1);
        }
    }
}

TEST_CASE("AO result dominates the baseline and is reproducible")
{
    const ScenarioConfig s = small_scenario();
    const auto d = coupler_for(s);
    const AoParams p = quick_params();
    const UserSet users = users_for(s, 4);
    const double fixed = baseline_fixed_pass(users, s, d, p.wmmse);
    for (Scheme scheme : {Scheme::AT, Scheme::DAC, Scheme::MOV})
    {
        const auto r = optimize(scheme, users, s, d, p, 17);
        CHECK(r.sum_rate >= fixed);
        CHECK(r.rate_trajectory.front() == fixed);
        CHECK(r.sum_rate == *std::max_element(r.rate_trajectory.begin(), r.rate_trajectory.end()));
        CHECK(r.iterations_used >= 1);
        CHECK(r.iterations_used <= p.max_iterations);

        for (const auto &history : r.ga_best_fitness)
            for (std::size_t g = 1; g < history.size(); ++g)
                CHECK(history[g] >= history[g - 1]);

        // recompute from scratch: no stale state in the reported rate
        const auto c = effective_channels(users, r.best_configuration, s, d);
        CHECK_THAT(sum_rate(c, r.precoders, s.noise_mw()), WithinAbs(r.sum_rate, 1e-12));
        CHECK(r.precoders.total_power() <= s.max_power_mw() * (1 + 1e-6));

        const auto again = optimize(scheme, users, s, d, p, 17);
        CHECK(again.sum_rate == r.sum_rate);
        CHECK(again.best_chromosome == r.best_chromosome);
        CHECK(again.rate_trajectory == r.rate_trajectory);
    }
}

TEST_CASE("single-antenna guides keep every guide on")
{
    ScenarioConfig s;
    s.users = 2;
    s.waveguides = 3;
    s.antennas_per_waveguide = 1;
    const auto d = coupler_for(s);
    AoParams p = quick_params();
    p.ga.population = 10;
    for (std::uint64_t seed : {5u, 6u, 7u})
    {
        const UserSet users = users_for(s, seed);
        const FitnessEvaluator eval(users, s, d);
        // oracle: every one of the 2^3 activation patterns
        double best = -1.0;
        int best_mask = -1;
        for (int mask = 1; mask < 8; ++mask)
        {
            Chromosome ch = neutral_chromosome(Scheme::DAC, s, d);
            for (int b = 0; b < 3; ++b)
                ch.activation_bits[static_cast<std::size_t>(b)] = (mask >> b) & 1;
            const double r = evaluate_jointly(ch, eval, p).sum_rate;
            if (r > best)
            {
                best = r;
                best_mask = mask;
            }
        }
        CHECK(best_mask == 7);
        const auto r = optimize(Scheme::DAC, users, s, d, p, seed);
        CHECK(std::count(r.best_configuration.active.begin(), r.best_configuration.active.end(), 1) == 3);
        CHECK_THAT(r.sum_rate, WithinRel(best, 1e-9));
    }
}

TEST_CASE("stage fitness modes")
{
    const ScenarioConfig s = small_scenario();
    const auto d = coupler_for(s);
    const UserSet users = users_for(s, 8);
    const FitnessEvaluator eval(users, s, d);
    AoParams p = quick_params();
    const auto neutral = neutral_chromosome(Scheme::AT, s, d);
    const auto joint = evaluate_jointly(neutral, eval, p);

    Chromosome other = neutral;
    other.at_genes[0] *= 0.5;
    p.fitness = StageFitness::fixed_precoders;
    CHECK(stage_fitness(other, eval, joint.precoders, p) == eval(other, joint.precoders));
    CHECK(stage_fitness(neutral, eval, joint.precoders, p) == joint.sum_rate);

    p.fitness = StageFitness::refreshed;
    p.refine_iterations = p.wmmse.max_iterations;
    const auto c = eval.channels(other);
    const double full = sum_rate(c, wmmse_solve(c, s.max_power_mw(), s.noise_mw(), std::nullopt, p.wmmse).precoders,
                                 s.noise_mw());
    CHECK(stage_fitness(other, eval, joint.precoders, p) == full);
}

TEST_CASE("fixed-precoder scoring still runs")
{
    const ScenarioConfig s = small_scenario();
    const auto d = coupler_for(s);
    AoParams p = quick_params();
    p.fitness = StageFitness::fixed_precoders;
    const UserSet users = users_for(s, 9);
    const auto r = optimize(Scheme::AT, users, s, d, p, 3);
    CHECK(r.sum_rate >= baseline_fixed_pass(users, s, d, p.wmmse));
}
