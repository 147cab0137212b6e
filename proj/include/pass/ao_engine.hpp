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

#ifndef PASS_AO_ENGINE_HPP
#define PASS_AO_ENGINE_HPP

#include "pass/ga_search.hpp"
#include "pass/wmmse.hpp"

#include <cstdint>
#include <vector>

namespace pass
{

/// How the GA stage scores a chromosome.
enum class StageFitness
{
    // Sum rate under the precoders of the current AO iteration, held fixed.
    fixed_precoders,
    // Sum rate after a short WMMSE solve on the chromosome's own channels.
    refreshed,
};

struct AoParams
{
    int max_iterations = 10;
    double rel_tolerance = 1e-3;
    StageFitness fitness = StageFitness::refreshed;
    // WMMSE sweeps per chromosome when fitness is `refreshed`.
    int refine_iterations = 20;
    GaParams ga;
    WmmseOptions wmmse;

    void validate() const;
};

struct AoResult
{
    PassConfiguration best_configuration;
    Chromosome best_chromosome;
    PrecoderSet precoders;
    // Sum rate of the GA's best chromosome with freshly solved precoders, one entry per refresh.
    std::vector<double> rate_trajectory;
    // Best fitness after each generation, one list per AO iteration.
    std::vector<std::vector<double>> ga_best_fitness;
    int iterations_used = 0;
    double sum_rate = 0.0;
};

/// Configuration plus WMMSE precoders evaluated together.
struct JointEvaluation
{
    PassConfiguration configuration;
    PrecoderSet precoders;
    double sum_rate = 0.0;
};

JointEvaluation evaluate_jointly(const Chromosome &ch, const FitnessEvaluator &evaluator, const AoParams &p);

/// GA-stage score of one chromosome. `stage` is only read in fixed_precoders mode.
double stage_fitness(const Chromosome &ch, const FitnessEvaluator &evaluator, const PrecoderSet &stage,
                     const AoParams &p);

/**
 * Alternating optimization: WMMSE precoders for the current best chromosome, then a GA stage
 * over the configuration with those precoders held fixed. The population is created once and
 * carried across iterations. The first refresh uses the neutral (fixed-PASS) chromosome.
 *
 * The returned configuration is the best jointly-evaluated one seen over all refreshes.
 */
AoResult optimize(Scheme scheme, const UserSet &users, const ScenarioConfig &s, const CouplerDesign &d,
                  const AoParams &p, std::uint64_t seed);

} // namespace pass

#endif
