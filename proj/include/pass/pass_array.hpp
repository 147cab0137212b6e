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

#ifndef PASS_PASS_ARRAY_HPP
#define PASS_PASS_ARRAY_HPP

#include "pass/coupled_mode.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace pass
{

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CDiagonal = Eigen::DiagonalMatrix<cd, Eigen::Dynamic>;

inline constexpr double kSpeedOfLight = 299792458.0;

struct Vec3
{
    double x = 0.0, y = 0.0, z = 0.0;
};

double distance(const Vec3 &a, const Vec3 &b);

/**
 * Scenario geometry and radio parameters. Defaults reproduce the reference deployment:
 * 28 GHz, 5 users, 5 waveguides with 6 antennas each, a 30 m x 5 m service area with 10 m
 * margins (D_z = 50 m), 10 m ceiling, 0.08 dB/m guide loss and n_g = 1.4.
 */
struct ScenarioConfig
{
    double carrier_frequency_hz = 28e9;
    int users = 5;
    int waveguides = 5;
    int antennas_per_waveguide = 6;
    double service_length_m = 30.0; // S_z
    double service_width_m = 5.0;   // S_x (= D_x)
    double ceiling_height_m = 10.0; // D_y
    double edge_margin_m = 10.0;    // D_0
    double attenuation_db_per_m = 0.08;
    double guide_index = 1.4;
    double noise_power_dbm = -110.0;
    double max_power_dbm = 15.0;
    double pinch_length_m = 0.03;
    // Unset means d_z - lambda0/2.
    std::optional<double> max_displacement_m = 4.995;
    // Upper end of the tunable normalized mismatch (material limit), rad.
    double max_phase_mismatch_rad = kMaxNormalizedMismatch;
    // 0 keeps the mismatch continuous; otherwise 2^bits uniform levels.
    int mismatch_quant_bits = 0;

    double wavelength() const { return kSpeedOfLight / carrier_frequency_hz; }
    double wavenumber() const;
    double guide_beta() const { return wavenumber() * guide_index; }
    // Amplitude attenuation in Np/m; |g|^2 decays at attenuation_db_per_m.
    double alpha_np() const;
    double deployment_length_m() const { return service_length_m + 2.0 * edge_margin_m; }
    double waveguide_spacing() const;
    double antenna_spacing() const;
    double displacement_range() const;
    int total_antennas() const { return waveguides * antennas_per_waveguide; }
    double noise_mw() const;
    double max_power_mw() const;

    /// Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;
};

CouplerDesign coupler_for(const ScenarioConfig &s);

/// Antennas indexed n = i * N_a + l (waveguide i, antenna l from the feed).
struct PassConfiguration
{
    int waveguides = 0;
    int antennas_per_waveguide = 0;
    std::vector<double> mismatches; // delta_beta, rad/m
    std::vector<std::uint8_t> active;
    std::vector<Vec3> positions;

    int size() const { return waveguides * antennas_per_waveguide; }
    int index(int waveguide, int antenna) const { return waveguide * antennas_per_waveguide + antenna; }
};

struct UserSet
{
    std::vector<Vec3> positions;
    int size() const { return static_cast<int>(positions.size()); }
};

/// Uniform grid over the service span, all antennas active and phase matched.
PassConfiguration build_initial_configuration(const ScenarioConfig &s);

/// Nominal antenna positions of the uniform grid.
std::vector<Vec3> nominal_positions(const ScenarioConfig &s);

/// exp(-j x) with x reduced modulo 2 pi first.
cd unit_phasor_neg(double x);

/// In-guide propagation g_n = exp(-(alpha + j beta_g) z_n).
CDiagonal propagation_matrix(const PassConfiguration &cfg, const ScenarioConfig &s);

/// Block-diagonal cascade of coupler coefficients, N x N_w.
CMatrix radiation_matrix(const PassConfiguration &cfg, const CouplerDesign &d);

/// Free-space LoS coefficient lambda/(4 pi d) exp(-j 2 pi d / lambda).
cd channel_coefficient(double dist, double wavelength);

/// Channel vector h_k for one user. Entries are conjugated coefficients, so h_k^H is the row
/// of raw coefficients and h_k^H G A w is the received amplitude.
CVector channel_vector(const Vec3 &user, const std::vector<Vec3> &antennas, double wavelength);
CVector channel_vector(const Vec3 &user, const PassConfiguration &cfg, const ScenarioConfig &s);

/// Rows of raw channel coefficients for all users (row k = h_k^H), K x N.
CMatrix channel_rows(const UserSet &users, const std::vector<Vec3> &antennas, double wavelength);

/// c_k = h_k^H G A for every user; K x N_w, rows in user order.
CMatrix effective_channels(const UserSet &users, const PassConfiguration &cfg, const ScenarioConfig &s,
                           const CouplerDesign &d);

/// Radiated power fraction |a_n|^2 exp(-2 alpha z_n) of every antenna.
std::vector<double> radiated_powers(const PassConfiguration &cfg, const ScenarioConfig &s, const CouplerDesign &d);

/// Power left in each guide behind its last antenna: |prod T11|^2 exp(-2 alpha z_end).
std::vector<double> residual_powers(const PassConfiguration &cfg, const ScenarioConfig &s, const CouplerDesign &d);

} // namespace pass

#endif
