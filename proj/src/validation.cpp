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

#include "pass/validation.hpp"

#include "pass/ao_engine.hpp"
#include "pass/sim_harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace pass
{

namespace
{

constexpr double kPi = std::numbers::pi;

std::string num(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

CheckResult check(std::string name, bool ok, std::string detail)
{
    return {std::move(name), ok, std::move(detail)};
}

// Branch y in [1/2, 1] of sinc(y) = value, by bisection on sinc itself.
double inverse_sinc(double value)
{
    double lo = 0.5, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        if (sinc(mid) > value)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

CMatrix random_channels(int users, int dim, Rng &rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix c(users, dim);
    for (int k = 0; k < users; ++k)
        for (int n = 0; n < dim; ++n)
            c(k, n) = cd(g(rng), g(rng));
    return c;
}

} // namespace

std::vector<CheckResult> run_property_suite(std::uint64_t seed)
{
    std::vector<CheckResult> out;
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const CouplerDesign d = CouplerDesign::from_length(0.03);

    {
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i)
        {
            const auto t = transmission_pair_normalized(4.0 * kPi * unit(rng));
            worst = std::max(worst, std::abs(std::norm(t.t_through) + std::norm(t.t_radiate) - 1.0));
        }
        out.push_back(check("coupler unitarity", worst < 1e-12, "max | |T11|^2+|T21|^2-1 | = " + num(worst)));
    }
    {
        double worst = 0.0;
        const double kappa = d.coupling_coefficient();
        for (int i = 0; i < 100; ++i)
        {
            const double db = (unit(rng) * 4.0 * kPi - 2.0 * kPi) / d.antenna_length();
            const double z = unit(rng) * d.antenna_length();
            const auto ode = integrate_coupled_modes(db, kappa, z, 10000);
            const auto ref = coupled_mode_amplitudes(db, kappa, z);
            worst = std::max({worst, std::abs(ode.a1 - ref.a1), std::abs(ode.a2 - ref.a2)});
        }
        out.push_back(check("RK4 vs closed form", worst < 1e-8, "max modulus error = " + num(worst)));
    }
    {
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i)
        {
            const double tau = i / 100.0;
            worst = std::max(worst, std::abs(power_transfer(inverse_power_transfer(tau, d), d) - tau));
        }
        out.push_back(check("inverse power transfer round trip", worst < 1e-9, "max error = " + num(worst)));
    }
    {
        bool ok = true;
        double prev = power_transfer_normalized(0.0);
        for (int i = 1; i <= 10000; ++i)
        {
            const double x = kMaxNormalizedMismatch * i / 10000.0;
            const double cur = power_transfer_normalized(x);
            ok = ok && cur < prev;
            prev = cur;
        }
        out.push_back(check("power transfer monotone", ok, "strictly decreasing on a 10^4 grid"));
    }
    {
        double worst_power = 0.0, worst_closed = 0.0;
        for (int m = 1; m <= 10; ++m)
        {
            std::vector<double> z(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                z[static_cast<std::size_t>(i)] = 10.0 + 6.0 * i;
            const auto sol = equal_power_mismatches(z, 0.0, d);
            double through = 1.0;
            for (int i = 0; i < m; ++i)
            {
                const double frac = sol.transfer_fractions[static_cast<std::size_t>(i)];
                worst_power = std::max(worst_power, std::abs(frac * through - 1.0 / m));
                through *= 1.0 - frac;
                const double delta = std::sqrt((1.0 / m) / (1.0 - static_cast<double>(i) / m));
                const double y = inverse_sinc(std::min(2.0 * delta / kPi, 1.0));
                const double closed = kPi / d.antenna_length() * std::sqrt(std::max(4.0 * y * y - 1.0, 0.0));
                worst_closed = std::max(worst_closed,
                                        std::abs(closed - sol.mismatches[static_cast<std::size_t>(i)]) * d.antenna_length());
            }
        }
        out.push_back(check("equal-power closure", worst_power < 1e-10 && worst_closed < 1e-9,
                            "power error " + num(worst_power) + ", closed-form error " + num(worst_closed)));
    }
    {
        double worst = 0.0;
        for (int i = 0; i <= 1000; ++i)
        {
            const double x = kMaxNormalizedMismatch * i / 1000.0;
            const double residual = std::arg(transmission_pair_normalized(x).t_radiate) + 0.5 * kPi + 0.5 * x;
            worst = std::max(worst, std::abs(std::remainder(residual, 2.0 * kPi)));
        }
        out.push_back(check("radiation phase law", worst < 1e-12, "max wrapped residual = " + num(worst)));
    }
    {
        ScenarioConfig s;
        double worst_excess = 0.0, worst_lossless = 0.0;
        for (double atten : {0.0, 0.08, 0.2})
        {
            s.attenuation_db_per_m = atten;
            for (int trial = 0; trial < 50; ++trial)
            {
                PassConfiguration cfg = build_initial_configuration(s);
                for (double &m : cfg.mismatches)
                    m = unit(rng) * kMaxNormalizedMismatch / d.antenna_length();
                const auto p = radiated_powers(cfg, s, d);
                const auto r = residual_powers(cfg, s, d);
                for (int i = 0; i < cfg.waveguides; ++i)
                {
                    double total = r[static_cast<std::size_t>(i)];
                    for (int l = 0; l < cfg.antennas_per_waveguide; ++l)
                        total += p[static_cast<std::size_t>(cfg.index(i, l))];
                    worst_excess = std::max(worst_excess, total - 1.0);
                    if (atten == 0.0)
                        worst_lossless = std::max(worst_lossless, std::abs(total - 1.0));
                }
            }
        }
        out.push_back(check("waveguide energy bound", worst_excess < 1e-12 && worst_lossless < 1e-12,
                            "max excess " + num(worst_excess) + ", lossless deviation " + num(worst_lossless)));
    }
    {
        double worst_drop = 0.0, worst_power = 0.0;
        for (int i = 0; i < 100; ++i)
        {
            const int users = 1 + static_cast<int>(unit(rng) * 5);
            const int dim = 1 + static_cast<int>(unit(rng) * 6);
            const CMatrix c = random_channels(users, dim, rng);
            const double p = std::pow(10.0, unit(rng) * 3.0 - 1.0);
            const auto r = wmmse_solve(c, p, 1.0);
            for (std::size_t t = 1; t < r.rate_trajectory.size(); ++t)
                worst_drop = std::max(worst_drop, r.rate_trajectory[t - 1] - r.rate_trajectory[t]);
            worst_power = std::max(worst_power, r.precoders.total_power() / p - 1.0);
        }
        out.push_back(check("WMMSE monotone and feasible", worst_drop <= 1e-9 && worst_power <= 1e-6,
                            "max rate drop " + num(worst_drop) + ", max power excess " + num(worst_power)));
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i)
        {
            const CMatrix c = random_channels(1, 1 + static_cast<int>(unit(rng) * 6), rng);
            const double p = 0.1 + unit(rng) * 10.0;
            const double expected = std::log2(1.0 + p * c.squaredNorm() / 0.5);
            worst = std::max(worst, std::abs(sum_rate(c, wmmse_solve(c, p, 0.5).precoders, 0.5) - expected));
        }
        out.push_back(check("WMMSE single-user optimum", worst < 1e-8, "max rate error " + num(worst)));
    }
    {
        ScenarioConfig s;
        bool ok = true;
        std::string detail = "10^4 random chromosomes per scheme";
        for (Scheme scheme : {Scheme::AT, Scheme::DAC, Scheme::MOV})
        {
            GaParams p;
            p.population = 10000;
            p.rng_seed = seed + 17;
            for (const Chromosome &ch : init_population(scheme, s, d, p))
            {
                const PassConfiguration cfg = decode(ch, s, d);
                for (int n = 0; n < cfg.size(); ++n)
                {
                    const double x = cfg.mismatches[static_cast<std::size_t>(n)] * d.antenna_length();
                    ok = ok && x >= -1e-12 && x <= kMaxNormalizedMismatch * (1.0 + 1e-12);
                    if (n % cfg.antennas_per_waveguide != 0)
                        ok = ok && cfg.positions[static_cast<std::size_t>(n)].z -
                                           cfg.positions[static_cast<std::size_t>(n - 1)].z >=
                                       0.5 * s.wavelength() - 1e-12;
                }
            }
        }
        out.push_back(check("decode feasibility closure", ok, detail));
    }
    return out;
}

std::string oracle_report(int steps)
{
    const CouplerDesign d = CouplerDesign::from_length(0.03);
    std::ostringstream os;
    os << "dbeta_L0_rad,z_over_L0,rk4_abs_a1_sq,closed_abs_a1_sq,rk4_abs_a2_sq,closed_abs_a2_sq,power_transfer,"
          "max_modulus_error\n";
    for (double x : {0.0, 0.5 * kPi, kPi, 1.5 * kPi, 2.0 * kPi, 2.5 * kPi, kMaxNormalizedMismatch})
        for (double frac : {0.5, 1.0})
        {
            const double db = x / d.antenna_length();
            const double z = frac * d.antenna_length();
            const auto ode = integrate_coupled_modes(db, d.coupling_coefficient(), z, steps);
            const auto ref = coupled_mode_amplitudes(db, d.coupling_coefficient(), z);
            const double err = std::max(std::abs(ode.a1 - ref.a1), std::abs(ode.a2 - ref.a2));
            char line[256];
            std::snprintf(line, sizeof line, "%.6f,%.2f,%.12f,%.12f,%.12f,%.12f,%.12f,%.3e\n", x, frac,
                          std::norm(ode.a1), std::norm(ref.a1), std::norm(ode.a2), std::norm(ref.a2),
                          frac == 1.0 ? power_transfer_normalized(x) : std::norm(ref.a2), err);
            os << line;
        }
    return os.str();
}

} // namespace pass
