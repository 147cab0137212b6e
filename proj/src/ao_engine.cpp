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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pass
{

void AoParams::validate() const
{
    if (max_iterations < 1)
        throw std::invalid_argument("AoParams: max_iterations must be at least 1");
    if (!(rel_tolerance > 0.0))
        throw std::invalid_argument("AoParams: rel_tolerance must be positive");
    if (fitness == StageFitness::refreshed && refine_iterations < 1)
        throw std::invalid_argument("AoParams: refine_iterations must be at least 1");
    ga.validate();
}

JointEvaluation evaluate_jointly(const Chromosome &ch, const FitnessEvaluator &evaluator, const AoParams &p)
{
    const ScenarioConfig &s = evaluator.scenario();
    JointEvaluation out;
    out.configuration = decode(ch, s, evaluator.design());
    const EffectiveChannels c = evaluator.channels(out.configuration, ch.scheme != Scheme::MOV);
    out.precoders = wmmse_solve(c, s.max_power_mw(), s.noise_mw(), std::nullopt, p.wmmse).precoders;
    out.sum_rate = sum_rate(c, out.precoders, s.noise_mw());
    return out;
}

double stage_fitness(const Chromosome &ch, const FitnessEvaluator &evaluator, const PrecoderSet &stage,
                     const AoParams &p)
{
    if (p.fitness == StageFitness::fixed_precoders)
        return evaluator(ch, stage);
    const ScenarioConfig &s = evaluator.scenario();
    const EffectiveChannels c = evaluator.channels(ch);
    WmmseOptions opt = p.wmmse;
    opt.max_iterations = p.refine_iterations;
    const WmmseResult r = wmmse_solve(c, s.max_power_mw(), s.noise_mw(), std::nullopt, opt);
    return sum_rate(c, r.precoders, s.noise_mw());
}

AoResult optimize(Scheme scheme, const UserSet &users, const ScenarioConfig &s, const CouplerDesign &d,
                  const AoParams &p, std::uint64_t seed)
{
    p.validate();
    s.validate();

    const FitnessEvaluator evaluator(users, s, d);
    const GeneSpace space = gene_space(scheme, s, d);
    Rng rng(seed);

    Population population = init_population(scheme, s, d, p.ga, rng);
    Chromosome current = population.front();

    AoResult result;
    bool have_best = false;
    JointEvaluation best;
    std::vector<double> fit(population.size());

    for (int iteration = 0;; ++iteration)
    {
        JointEvaluation joint = evaluate_jointly(current, evaluator, p);
        const double previous = result.rate_trajectory.empty() ? 0.0 : result.rate_trajectory.back();
        result.rate_trajectory.push_back(joint.sum_rate);

        if (!have_best || joint.sum_rate > best.sum_rate)
        {
            best = joint;
            result.best_chromosome = current;
            have_best = true;
        }

        if (iteration >= p.max_iterations || p.ga.generations == 0)
            break;
        if (iteration > 0)
        {
            const double gain = (joint.sum_rate - previous) / std::max(std::abs(previous), 1e-300);
            if (gain < p.rel_tolerance)
                break;
        }

        // GA stage under the refreshed precoders
        std::vector<double> history;
        history.reserve(static_cast<std::size_t>(p.ga.generations));
        for (int g = 0; g < p.ga.generations; ++g)
        {
            for (std::size_t i = 0; i < population.size(); ++i)
                fit[i] = stage_fitness(population[i], evaluator, joint.precoders, p);
            history.push_back(*std::max_element(fit.begin(), fit.end()));
            population = evolve(population, fit, p.ga, space, rng);
        }
        for (std::size_t i = 0; i < population.size(); ++i)
            fit[i] = stage_fitness(population[i], evaluator, joint.precoders, p);
        const auto top = static_cast<std::size_t>(std::max_element(fit.begin(), fit.end()) - fit.begin());
        history.push_back(fit[top]);
        result.ga_best_fitness.push_back(std::move(history));
        current = population[top];
        ++result.iterations_used;
    }

    result.best_configuration = std::move(best.configuration);
    result.precoders = std::move(best.precoders);
    result.sum_rate = best.sum_rate;
    return result;
}

} // namespace pass
