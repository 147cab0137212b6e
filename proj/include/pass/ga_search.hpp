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

#ifndef PASS_GA_SEARCH_HPP
#define PASS_GA_SEARCH_HPP

#include "pass/pass_array.hpp"
#include "pass/wmmse.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace pass
{

/// Reconfiguration scheme searched by the GA: amplitude tuning, discrete activation, movable.
enum class Scheme
{
    AT,
    DAC,
    MOV
};

std::string_view to_string(Scheme s);
Scheme parse_scheme(std::string_view name);

using Rng = std::mt19937_64;

/// Scheme-tagged genome. Only the fields of the tagged scheme are populated.
struct Chromosome
{
    Scheme scheme = Scheme::AT;
    std::vector<double> at_genes;                // delta_beta per antenna, rad/m (AT)
    std::vector<std::uint8_t> activation_bits;   // DAC, MOV
    std::vector<std::uint32_t> displacement_codes; // offset-binary z offsets in lambda/2 steps (MOV)

    bool operator==(const Chromosome &) const = default;
};

using Population = std::vector<Chromosome>;

struct GaParams
{
    int population = 100;
    int generations = 200;
    double crossover_rate = 0.6;
    double mutation_rate = 0.3;
    int elites = 1;
    int tournament_size = 3;
    std::uint64_t rng_seed = 0;

    void validate() const;
};

/// Bounds of the search space for one scheme in one scenario.
struct GeneSpace
{
    Scheme scheme = Scheme::AT;
    int antennas = 0;
    double at_upper = 0.0;  // rad/m
    int quant_bits = 0;     // AT levels; 0 = continuous
    int code_bits = 0;      // MOV displacement bits
    double length = 0.0;    // L0, for quantization

    int bit_length() const;
};

GeneSpace gene_space(Scheme scheme, const ScenarioConfig &s, const CouplerDesign &d);

/// Bits per displacement code: ceil(log2(dz_max / (lambda/2))), at least 1.
int displacement_bits(const ScenarioConfig &s);

/// Displacement in metres encoded by a code, clamped to +/- dz_max/2. The mid code maps to 0.
double decode_displacement(std::uint32_t code, int bits, const ScenarioConfig &s);

/// All antennas active with equal-power mismatches at nominal positions (the fixed baseline).
Chromosome neutral_chromosome(Scheme scheme, const ScenarioConfig &s, const CouplerDesign &d);

Population init_population(Scheme scheme, const ScenarioConfig &s, const CouplerDesign &d, const GaParams &p,
                           Rng &rng);
Population init_population(Scheme scheme, const ScenarioConfig &s, const CouplerDesign &d, const GaParams &p);

/**
 * Maps a genome to a physical configuration.
 *
 * AT copies the mismatches at nominal positions. DAC and MOV activate antennas per bit and
 * give the active ones equal-power mismatches (inactive antennas sit at the zero-radiation
 * end of the range). MOV additionally shifts active antennas along z, clamped to the
 * displacement window and pushed apart to keep lambda/2 spacing.
 */
PassConfiguration decode(const Chromosome &ch, const ScenarioConfig &s, const CouplerDesign &d);

/// Snap AT genes to the nearest of 2^bits levels over [0, range_max / L0].
Chromosome quantize_genes(const Chromosome &ch, int bits, double range_max, const CouplerDesign &d);

/// Sum rate of a chromosome under fixed precoders. Caches the nominal-position channels.
class FitnessEvaluator
{
  public:
    FitnessEvaluator(UserSet users, ScenarioConfig s, CouplerDesign d);

    EffectiveChannels channels(const PassConfiguration &cfg, bool nominal_positions) const;
    EffectiveChannels channels(const Chromosome &ch) const;
    double operator()(const Chromosome &ch, const PrecoderSet &precoders) const;

    const ScenarioConfig &scenario() const { return s_; }
    const CouplerDesign &design() const { return d_; }

  private:
    UserSet users_;
    ScenarioConfig s_;
    CouplerDesign d_;
    CMatrix nominal_hg_; // H G at nominal positions, K x N
};

double fitness(const Chromosome &ch, const PrecoderSet &precoders, const UserSet &users, const ScenarioConfig &s,
               const CouplerDesign &d);

/// Tournament selection, crossover, mutation and elitism; output size equals input size.
Population evolve(const Population &population, const std::vector<double> &fitnesses, const GaParams &p,
                  const GeneSpace &space, Rng &rng);

} // namespace pass

#endif
