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

#include "pass/coupled_mode.hpp"

#include <cmath>
#include <string>

namespace pass
{

namespace
{
constexpr double kPi = std::numbers::pi;
constexpr double kFeasibleSlack = 1e-12;
} // namespace

double sinc(double x)
{
    if (x == 0.0)
        return 1.0;
    const double px = kPi * x;
    return std::sin(px) / px;
}

CouplerDesign CouplerDesign::from_length(double antenna_length_m)
{
    if (!(antenna_length_m > 0.0) || !std::isfinite(antenna_length_m))
        throw std::invalid_argument("CouplerDesign: antenna length must be positive");
    return CouplerDesign(kPi / (2.0 * antenna_length_m), antenna_length_m);
}

CouplerDesign CouplerDesign::from_coupling(double coupling_coefficient_rad_per_m)
{
    if (!(coupling_coefficient_rad_per_m > 0.0) || !std::isfinite(coupling_coefficient_rad_per_m))
        throw std::invalid_argument("CouplerDesign: coupling coefficient must be positive");
    return CouplerDesign(coupling_coefficient_rad_per_m, kPi / (2.0 * coupling_coefficient_rad_per_m));
}

bool Mismatch::feasible() const
{
    return normalized >= -kFeasibleSlack && normalized <= kMaxNormalizedMismatch * (1.0 + kFeasibleSlack);
}

double theta_normalized(double x)
{
    const double r = x / kPi;
    return std::sqrt(1.0 + r * r);
}

TransmissionPair transmission_pair_normalized(double x)
{
    const double th = theta_normalized(x);
    const double s = sinc(0.5 * th);
    const cd through = std::polar(1.0, 0.5 * x) * cd(std::cos(0.5 * kPi * th), -0.5 * x * s);
    const cd radiate = std::polar(0.5 * kPi * s, -0.5 * kPi - 0.5 * x);
    return {through, radiate};
}

double power_transfer_normalized(double x)
{
    const double s = sinc(0.5 * theta_normalized(x));
    return 0.25 * kPi * kPi * s * s;
}

double theta(const Mismatch &m) { return theta_normalized(m.normalized); }

TransmissionPair transmission_pair(const Mismatch &m, const CouplerDesign &)
{
    return transmission_pair_normalized(m.normalized);
}

double power_transfer(const Mismatch &m, const CouplerDesign &) { return power_transfer_normalized(m.normalized); }

RadiationWeight radiation_weight(const Mismatch &m, const CouplerDesign &)
{
    if (!m.feasible())
        throw FeasibilityError("radiation_weight: normalized mismatch " + std::to_string(m.normalized) +
                               " outside [0, pi*sqrt(3)]");
    const double amplitude = 0.5 * kPi * sinc(0.5 * theta_normalized(m.normalized));
    return {amplitude, -(0.5 * kPi + 0.5 * m.normalized)};
}

Mismatch inverse_power_transfer(double target, const CouplerDesign &d)
{
    if (!(target >= 0.0 && target <= 1.0))
        throw std::domain_error("inverse_power_transfer: target must lie in [0, 1]");
    if (target == 1.0)
        return Mismatch::from_normalized(0.0, d);
    if (target == 0.0)
        return Mismatch::from_normalized(kMaxNormalizedMismatch, d);

    // power_transfer_normalized is strictly decreasing on [0, pi*sqrt(3)]
    double lo = 0.0, hi = kMaxNormalizedMismatch;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (power_transfer_normalized(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return Mismatch::from_normalized(0.5 * (lo + hi), d);
}

EqualPowerSolution equal_power_mismatches(const std::vector<double> &z_active, double alpha_np,
                                          const CouplerDesign &d)
{
    EqualPowerSolution out;
    if (z_active.empty())
        return out;
    if (!(alpha_np >= 0.0))
        throw std::invalid_argument("equal_power_mismatches: attenuation must be non-negative");
    for (std::size_t m = 0; m < z_active.size(); ++m)
    {
        if (!(z_active[m] >= 0.0))
            throw std::invalid_argument("equal_power_mismatches: positions must be non-negative");
        if (m > 0 && z_active[m] < z_active[m - 1])
            throw std::invalid_argument("equal_power_mismatches: positions must be sorted feed-to-end");
    }

    const std::size_t count = z_active.size();

    // The remaining guided power is affine in the common power P, so delta_M^2 = 1 fixes
    // P = 1 / sum_m exp(2 alpha z_m) exactly (1/M without loss).
    double power = 0.0;
    if (alpha_np == 0.0)
        power = 1.0 / static_cast<double>(count);
    else
    {
        double inv_sum = 0.0;
        for (double z : z_active)
            inv_sum += std::exp(2.0 * alpha_np * z);
        power = 1.0 / inv_sum;
    }

    out.per_antenna_power = power;
    out.mismatches.reserve(count);
    out.transfer_fractions.reserve(count);

    double through = 1.0; // prod_{i<m} (1 - delta_i^2)
    for (std::size_t m = 0; m < count; ++m)
    {
        const double denom = std::exp(-2.0 * alpha_np * z_active[m]) * through;
        if (!(denom > 0.0))
            throw FeasibilityError("equal_power_mismatches: no guided power left at active antenna " +
                                   std::to_string(m));
        double fraction = power / denom;
        if (m + 1 == count)
        {
            if (std::abs(fraction - 1.0) > 1e-9)
                throw FeasibilityError("equal_power_mismatches: last antenna fraction " + std::to_string(fraction));
            fraction = 1.0;
        }
        else if (fraction > 1.0)
            throw FeasibilityError("equal_power_mismatches: transfer fraction exceeds one");

        out.transfer_fractions.push_back(fraction);
        out.mismatches.push_back(inverse_power_transfer(fraction, d).delta_beta);
        through *= 1.0 - fraction;
    }
    out.residual_power = std::exp(-2.0 * alpha_np * z_active.back()) * through;
    return out;
}

ModalAmplitudes coupled_mode_amplitudes(double delta_beta, double kappa, double z)
{
    const double half = 0.5 * delta_beta;
    const double gamma = std::sqrt(kappa * kappa + half * half);
    const double gz = gamma * z;
    const cd a1 = std::polar(1.0, half * z) * cd(std::cos(gz), -half / gamma * std::sin(gz));
    // kappa / (j gamma) = -j kappa / gamma
    const cd a2 = cd(0.0, -kappa / gamma) * std::polar(1.0, -half * z) * std::sin(gz);
    return {a1, a2};
}

ModalAmplitudes integrate_coupled_modes(double delta_beta, double kappa, double z_end, int steps)
{
    if (steps < 1)
        throw std::invalid_argument("integrate_coupled_modes: steps must be positive");

    const cd mj(0.0, -1.0);
    auto rhs = [&](double z, const cd &a1, const cd &a2) {
        const cd phase = std::polar(1.0, delta_beta * z);
        return std::pair<cd, cd>{mj * kappa * phase * a2, mj * kappa * std::conj(phase) * a1};
    };

    cd a1(1.0, 0.0), a2(0.0, 0.0);
    const double h = z_end / steps;
    for (int i = 0; i < steps; ++i)
    {
        const double z = i * h;
        const auto [k1a, k1b] = rhs(z, a1, a2);
        const auto [k2a, k2b] = rhs(z + 0.5 * h, a1 + 0.5 * h * k1a, a2 + 0.5 * h * k1b);
        const auto [k3a, k3b] = rhs(z + 0.5 * h, a1 + 0.5 * h * k2a, a2 + 0.5 * h * k2b);
        const auto [k4a, k4b] = rhs(z + h, a1 + h * k3a, a2 + h * k3b);
        a1 += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
        a2 += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    }
    return {a1, a2};
}

ModalAmplitudes coupled_mode_oracle(const Mismatch &m, const CouplerDesign &d, int steps)
{
    if (steps < 1000)
        throw std::invalid_argument("coupled_mode_oracle: at least 1000 steps required");
    return integrate_coupled_modes(m.delta_beta, d.coupling_coefficient(), d.antenna_length(), steps);
}

} // namespace pass
