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

#include "pass/ga_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pass
{

std::string_view to_string(Scheme s)
{
    switch (s)
    {
    case Scheme::AT:
        return "AT";
    case Scheme::DAC:
        return "DAC";
    case Scheme::MOV:
        return "MOV";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name)
{
    if (name == "AT")
        return Scheme::AT;
    if (name == "DAC")
        return Scheme::DAC;
    if (name == "MOV")
        return Scheme::MOV;
    throw std::invalid_argument("unknown PASS scheme '" + std::string(name) + "'");
}

void GaParams::validate() const
{
    if (population < 2)
        throw std::invalid_argument("GaParams: population must be at least 2");
    if (generations < 0)
        throw std::invalid_argument("GaParams: generations must be non-negative");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0) || !(mutation_rate >= 0.0 && mutation_rate <= 1.0))
        throw std::invalid_argument("GaParams: rates must lie in [0, 1]");
    if (elites < 0 || elites >= population)
        throw std::invalid_argument("GaParams: elites must be smaller than the population");
    if (tournament_size < 1)
        throw std::invalid_argument("GaParams: tournament size must be positive");
}

int GeneSpace::bit_length() const
{
    switch (scheme)
    {
    case Scheme::AT:
        return 0;
    case Scheme::DAC:
        return antennas;
    case Scheme::MOV:
        return antennas * (1 + code_bits);
    }
    return 0;
}

int displacement_bits(const ScenarioConfig &s)
{
    const double steps = s.displacement_range() / (0.5 * s.wavelength());
    if (!(steps > 1.0))
        return 1;
    return std::clamp(static_cast<int>(std::ceil(std::log2(steps))), 1, 31);
}

double decode_displacement(std::uint32_t code, int bits, const ScenarioConfig &s)
{
    const double half_window = 0.5 * s.displacement_range();
    const double centre = static_cast<double>(std::uint64_t{1} << (bits - 1));
    const double dz = (static_cast<double>(code) - centre) * 0.5 * s.wavelength();
    return std::clamp(dz, -half_window, half_window);
}

GeneSpace gene_space(Scheme scheme, const ScenarioConfig &s, const CouplerDesign &d)
{
    GeneSpace g;
    g.scheme = scheme;
    g.antennas = s.total_antennas();
    g.length = d.antenna_length();
    g.at_upper = std::min(s.max_phase_mismatch_rad, kMaxNormalizedMismatch) / d.antenna_length();
    g.quant_bits = s.mismatch_quant_bits;
    g.code_bits = scheme == Scheme::MOV ? displacement_bits(s) : 0;
    return g;
}

namespace
{

double quantize_value(double gene, int bits, double upper)
{
    const double levels = static_cast<double>((std::uint64_t{1} << bits) - 1);
    const double step = upper / levels;
    const double k = std::clamp(std::round(gene / step), 0.0, levels);
    return k * step;
}

void snap(Chromosome &ch, const GeneSpace &space)
{
    for (double &g : ch.at_genes)
    {
        g = std::clamp(g, 0.0, space.at_upper);
        if (space.quant_bits > 0)
            g = quantize_value(g, space.quant_bits, space.at_upper);
    }
}

std::uint32_t code_mask(int bits) { return static_cast<std::uint32_t>((std::uint64_t{1} << bits) - 1); }

} // namespace

Chromosome neutral_chromosome(Scheme scheme, const ScenarioConfig &s, const CouplerDesign &d)
{
    const auto n = static_cast<std::size_t>(s.total_antennas());
    Chromosome ch;
    ch.scheme = scheme;
    switch (scheme)
    {
    case Scheme::AT: {
        Chromosome all_on;
        all_on.scheme = Scheme::DAC;
        all_on.activation_bits.assign(n, 1);
        ch.at_genes = decode(all_on, s, d).mismatches;
        snap(ch, gene_space(scheme, s, d));
        break;
    }
    case Scheme::DAC:
        ch.activation_bits.assign(n, 1);
        break;
    case Scheme::MOV: {
        const int bits = displacement_bits(s);
        ch.activation_bits.assign(n, 1);
        ch.displacement_codes.assign(n, static_cast<std::uint32_t>(std::uint64_t{1} << (bits - 1)));
        break;
    }
    }
    return ch;
}

Population init_population(Scheme scheme, const ScenarioConfig &s, const CouplerDesign &d, const GaParams &p,
                           Rng &rng)
{
    p.validate();
    const GeneSpace space = gene_space(scheme, s, d);
    const auto n = static_cast<std::size_t>(space.antennas);

    Population pop;
    pop.reserve(static_cast<std::size_t>(p.population));
    pop.push_back(neutral_chromosome(scheme, s, d));

    std::uniform_real_distribution<double> gene(0.0, space.at_upper);
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<std::uint32_t> code(0, space.code_bits > 0 ? code_mask(space.code_bits) : 0);

    while (pop.size() < static_cast<std::size_t>(p.population))
    {
        Chromosome ch;
        ch.scheme = scheme;
        if (scheme == Scheme::AT)
        {
            ch.at_genes.resize(n);
            for (double &g : ch.at_genes)
                g = gene(rng);
            snap(ch, space);
        }
        else
        {
            ch.activation_bits.resize(n);
            for (auto &b : ch.activation_bits)
                b = coin(rng) ? 1 : 0;
            if (scheme == Scheme::MOV)
            {
                ch.displacement_codes.resize(n);
                for (auto &c : ch.displacement_codes)
                    c = code(rng);
            }
        }
        pop.push_back(std::move(ch));
    }
    return pop;
}

Population init_population(Scheme scheme, const ScenarioConfig &s, const CouplerDesign &d, const GaParams &p)
{
    Rng rng(p.rng_seed);
    return init_population(scheme, s, d, p, rng);
}

PassConfiguration decode(const Chromosome &ch, const ScenarioConfig &s, const CouplerDesign &d)
{
    PassConfiguration cfg = build_initial_configuration(s);
    const auto n = static_cast<std::size_t>(cfg.size());

    if (ch.scheme == Scheme::AT)
    {
        if (ch.at_genes.size() != n)
            throw std::invalid_argument("decode: AT chromosome length does not match the array");
        cfg.mismatches = ch.at_genes;
        return cfg;
    }

    if (ch.activation_bits.size() != n)
        throw std::invalid_argument("decode: activation vector length does not match the array");
    if (ch.scheme == Scheme::MOV && ch.displacement_codes.size() != n)
        throw std::invalid_argument("decode: displacement vector length does not match the array");

    const double off = kMaxNormalizedMismatch / d.antenna_length();
    const double min_gap = 0.5 * s.wavelength();
    const double alpha = s.alpha_np();
    const int bits = ch.scheme == Scheme::MOV ? displacement_bits(s) : 0;

    std::vector<double> z_active;
    std::vector<std::size_t> active_index;
    for (int i = 0; i < cfg.waveguides; ++i)
    {
        z_active.clear();
        active_index.clear();
        for (int l = 0; l < cfg.antennas_per_waveguide; ++l)
        {
            const auto idx = static_cast<std::size_t>(cfg.index(i, l));
            const bool on = ch.activation_bits[idx] != 0;
            cfg.active[idx] = on ? 1 : 0;
            if (ch.scheme == Scheme::MOV && on)
                cfg.positions[idx].z += decode_displacement(ch.displacement_codes[idx], bits, s);
            if (l > 0)
            {
                const double floor_z = cfg.positions[idx - 1].z + min_gap;
                if (cfg.positions[idx].z < floor_z)
                    cfg.positions[idx].z = floor_z;
            }
            cfg.mismatches[idx] = off;
            if (on)
            {
                z_active.push_back(cfg.positions[idx].z);
                active_index.push_back(idx);
            }
        }
        const EqualPowerSolution eq = equal_power_mismatches(z_active, alpha, d);
        for (std::size_t m = 0; m < active_index.size(); ++m)
            cfg.mismatches[active_index[m]] = eq.mismatches[m];
    }
    return cfg;
}

Chromosome quantize_genes(const Chromosome &ch, int bits, double range_max, const CouplerDesign &d)
{
    if (ch.scheme != Scheme::AT)
        throw std::invalid_argument("quantize_genes: only AT chromosomes carry real genes");
    if (bits < 1 || bits > 30)
        throw std::invalid_argument("quantize_genes: bits must lie in [1, 30]");
    Chromosome out = ch;
    const double upper = range_max / d.antenna_length();
    for (double &g : out.at_genes)
        g = quantize_value(g, bits, upper);
    return out;
}

FitnessEvaluator::FitnessEvaluator(UserSet users, ScenarioConfig s, CouplerDesign d)
    : users_(std::move(users)), s_(std::move(s)), d_(d)
{
    const PassConfiguration nominal = build_initial_configuration(s_);
    nominal_hg_ = channel_rows(users_, nominal.positions, s_.wavelength()) * propagation_matrix(nominal, s_);
}

EffectiveChannels FitnessEvaluator::channels(const PassConfiguration &cfg, bool nominal_positions) const
{
    if (nominal_positions)
        return nominal_hg_ * radiation_matrix(cfg, d_);
    const CMatrix hg = channel_rows(users_, cfg.positions, s_.wavelength()) * propagation_matrix(cfg, s_);
    return hg * radiation_matrix(cfg, d_);
}

EffectiveChannels FitnessEvaluator::channels(const Chromosome &ch) const
{
    return channels(decode(ch, s_, d_), ch.scheme != Scheme::MOV);
}

double FitnessEvaluator::operator()(const Chromosome &ch, const PrecoderSet &precoders) const
{
    return sum_rate(channels(ch), precoders, s_.noise_mw());
}

double fitness(const Chromosome &ch, const PrecoderSet &precoders, const UserSet &users, const ScenarioConfig &s,
               const CouplerDesign &d)
{
    return sum_rate(effective_channels(users, decode(ch, s, d), s, d), precoders, s.noise_mw());
}

namespace
{

std::size_t tournament(const std::vector<double> &fitnesses, int size, Rng &rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, fitnesses.size() - 1);
    std::size_t best = pick(rng);
    for (int t = 1; t < size; ++t)
    {
        const std::size_t c = pick(rng);
        if (fitnesses[c] > fitnesses[best] || (fitnesses[c] == fitnesses[best] && c < best))
            best = c;
    }
    return best;
}

void crossover(Chromosome &a, Chromosome &b, Rng &rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (a.scheme == Scheme::AT)
    {
        const double w = unit(rng);
        for (std::size_t i = 0; i < a.at_genes.size(); ++i)
        {
            const double x = a.at_genes[i], y = b.at_genes[i];
            a.at_genes[i] = w * x + (1.0 - w) * y;
            b.at_genes[i] = (1.0 - w) * x + w * y;
        }
        return;
    }
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < a.activation_bits.size(); ++i)
        if (coin(rng))
            std::swap(a.activation_bits[i], b.activation_bits[i]);
    for (std::size_t i = 0; i < a.displacement_codes.size(); ++i)
    {
        std::uint32_t swap_mask = 0;
        for (int bit = 0; bit < 32; ++bit)
            if (coin(rng))
                swap_mask |= std::uint32_t{1} << bit;
        const std::uint32_t diff = (a.displacement_codes[i] ^ b.displacement_codes[i]) & swap_mask;
        a.displacement_codes[i] ^= diff;
        b.displacement_codes[i] ^= diff;
    }
}

void mutate(Chromosome &ch, const GeneSpace &space, Rng &rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (ch.scheme == Scheme::AT)
    {
        const double rate = 1.0 / static_cast<double>(std::max<std::size_t>(ch.at_genes.size(), 1));
        std::normal_distribution<double> step(0.0, 0.1 * space.at_upper);
        for (double &g : ch.at_genes)
            if (unit(rng) < rate)
                g += step(rng);
        return;
    }
    const double rate = 1.0 / static_cast<double>(std::max(space.bit_length(), 1));
    for (auto &b : ch.activation_bits)
        if (unit(rng) < rate)
            b ^= 1;
    for (auto &c : ch.displacement_codes)
        for (int bit = 0; bit < space.code_bits; ++bit)
            if (unit(rng) < rate)
                c ^= std::uint32_t{1} << bit;
}

} // namespace

Population evolve(const Population &population, const std::vector<double> &fitnesses, const GaParams &p,
                  const GeneSpace &space, Rng &rng)
{
    if (population.size() != fitnesses.size())
        throw std::invalid_argument("evolve: fitnesses must align with the population");
    if (population.empty())
        return {};

    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fitnesses[a] > fitnesses[b]; });

    Population next;
    next.reserve(population.size());
    const auto elites = std::min<std::size_t>(static_cast<std::size_t>(std::max(p.elites, 0)), population.size());
    for (std::size_t e = 0; e < elites; ++e)
        next.push_back(population[order[e]]);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (next.size() < population.size())
    {
        Chromosome a = population[tournament(fitnesses, p.tournament_size, rng)];
        Chromosome b = population[tournament(fitnesses, p.tournament_size, rng)];
        if (unit(rng) < p.crossover_rate)
            crossover(a, b, rng);
        if (unit(rng) < p.mutation_rate)
            mutate(a, space, rng);
        if (unit(rng) < p.mutation_rate)
            mutate(b, space, rng);
        snap(a, space);
        snap(b, space);
        const std::uint32_t mask = space.code_bits > 0 ? code_mask(space.code_bits) : 0;
        for (auto &c : a.displacement_codes)
            c &= mask;
        for (auto &c : b.displacement_codes)
            c &= mask;
        next.push_back(std::move(a));
        if (next.size() < population.size())
            next.push_back(std::move(b));
    }
    return next;
}

} // namespace pass
