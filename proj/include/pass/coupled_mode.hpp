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

#ifndef PASS_COUPLED_MODE_HPP
#define PASS_COUPLED_MODE_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pass
{

using cd = std::complex<double>;

/// Largest normalized phase mismatch (delta_beta * L0) that still belongs to the design range.
/// At this point the power transfer to the pinching antenna is exactly zero.
inline constexpr double kMaxNormalizedMismatch = std::numbers::pi * 1.7320508075688772935;

/// Raised when a mismatch or a geometry lies outside the physically realizable set.
class FeasibilityError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// sin(pi x) / (pi x), with sinc(0) = 1
double sinc(double x);

/// Symmetric directional coupler with kappa0 * L0 = pi / 2 (full transfer at phase match).
class CouplerDesign
{
  public:
    static CouplerDesign from_length(double antenna_length_m);
    static CouplerDesign from_coupling(double coupling_coefficient_rad_per_m);

    double coupling_coefficient() const { return kappa_; }
    double antenna_length() const { return length_; }

  private:
    CouplerDesign(double kappa, double length) : kappa_(kappa), length_(length) {}
    double kappa_;
    double length_;
};

/// Phase mismatch between guide and antenna propagation constants.
struct Mismatch
{
    double delta_beta = 0.0; // rad/m
    double normalized = 0.0; // delta_beta * L0

    static Mismatch from_delta_beta(double delta_beta, const CouplerDesign &d)
    {
        return {delta_beta, delta_beta * d.antenna_length()};
    }
    static Mismatch from_normalized(double normalized, const CouplerDesign &d)
    {
        return {normalized / d.antenna_length(), normalized};
    }

    /// Inside [0, pi*sqrt(3)] up to a 1e-12 relative slack.
    bool feasible() const;
};

/// Through (T11) and radiated (T21) field coefficients of one coupler.
struct TransmissionPair
{
    cd t_through;
    cd t_radiate;
};

struct RadiationWeight
{
    double amplitude;
    double phase; // rad
};

struct EqualPowerSolution
{
    std::vector<double> mismatches;       // delta_beta (rad/m) of active antennas, feed to end
    std::vector<double> transfer_fractions; // delta_m^2
    double per_antenna_power = 0.0;
    double residual_power = 1.0;
};

struct ModalAmplitudes
{
    cd a1; // guide
    cd a2; // antenna
};

// Normalized-variable kernels. x is delta_beta * L0.
double theta_normalized(double x);
TransmissionPair transmission_pair_normalized(double x);
double power_transfer_normalized(double x);

double theta(const Mismatch &m);
TransmissionPair transmission_pair(const Mismatch &m, const CouplerDesign &d);
double power_transfer(const Mismatch &m, const CouplerDesign &d);

/// Polar form of T21. Throws FeasibilityError outside the design range.
RadiationWeight radiation_weight(const Mismatch &m, const CouplerDesign &d);

/// Unique mismatch in [0, pi*sqrt(3)] / L0 whose power transfer equals target.
/// Throws std::domain_error for targets outside [0, 1].
Mismatch inverse_power_transfer(double target, const CouplerDesign &d);

/**
 * Mismatches that make every active antenna radiate the same power.
 *
 * z_active holds the feed-distance of each active antenna (ascending). alpha_np is the
 * amplitude attenuation of the guide in Np/m. The radiated power of antenna m is
 *   delta_m^2 * exp(-2 alpha z_m) * prod_{i<m} (1 - delta_i^2),
 * and the common power is the largest value for which the last antenna absorbs everything
 * that reaches it (delta_M^2 = 1). Without attenuation this is 1/M.
 */
EqualPowerSolution equal_power_mismatches(const std::vector<double> &z_active, double alpha_np,
                                          const CouplerDesign &d);

/// Closed-form coupled-mode amplitudes A1(z), A2(z) for A1(0) = 1, A2(0) = 0, symmetric coupling.
ModalAmplitudes coupled_mode_amplitudes(double delta_beta, double kappa, double z);

/// RK4 integration of the coupled-mode equations from 0 to z_end.
ModalAmplitudes integrate_coupled_modes(double delta_beta, double kappa, double z_end, int steps = 10000);

/// RK4 amplitudes at the end of the antenna (z = L0). Requires steps >= 1000.
ModalAmplitudes coupled_mode_oracle(const Mismatch &m, const CouplerDesign &d, int steps = 10000);

} // namespace pass

#endif
