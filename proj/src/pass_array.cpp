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

#include "pass/pass_array.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pass
{

namespace
{
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const char *what)
{
    if (!ok)
        throw std::invalid_argument(std::string("ScenarioConfig: ") + what);
}
} // namespace

double distance(const Vec3 &a, const Vec3 &b)
{
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double ScenarioConfig::wavenumber() const { return kTwoPi / wavelength(); }

double ScenarioConfig::alpha_np() const { return attenuation_db_per_m * std::log(10.0) / 20.0; }

double ScenarioConfig::waveguide_spacing() const
{
    return waveguides > 1 ? service_width_m / (waveguides - 1) : 0.0;
}

double ScenarioConfig::antenna_spacing() const
{
    return antennas_per_waveguide > 1 ? service_length_m / (antennas_per_waveguide - 1) : service_length_m;
}

double ScenarioConfig::displacement_range() const
{
    if (max_displacement_m)
        return *max_displacement_m;
    return std::max(0.0, antenna_spacing() - 0.5 * wavelength());
}

double ScenarioConfig::noise_mw() const { return std::pow(10.0, noise_power_dbm / 10.0); }

double ScenarioConfig::max_power_mw() const { return std::pow(10.0, max_power_dbm / 10.0); }

void ScenarioConfig::validate() const
{
    require(carrier_frequency_hz > 0.0 && std::isfinite(carrier_frequency_hz), "carrier frequency must be positive");
    require(users >= 1, "at least one user");
    require(waveguides >= 1, "at least one waveguide");
    require(antennas_per_waveguide >= 1, "at least one antenna per waveguide");
    require(service_length_m > 0.0 && service_width_m > 0.0, "service area must be positive");
    require(ceiling_height_m > 0.0, "ceiling height must be positive");
    require(edge_margin_m >= 0.0, "edge margin must be non-negative");
    require(attenuation_db_per_m >= 0.0, "attenuation must be non-negative");
    require(guide_index > 0.0, "guide index must be positive");
    require(std::isfinite(noise_power_dbm) && std::isfinite(max_power_dbm), "powers must be finite");
    require(pinch_length_m > 0.0, "pinch length must be positive");
    require(!max_displacement_m || *max_displacement_m >= 0.0, "max displacement must be non-negative");
    require(max_phase_mismatch_rad > 0.0 && max_phase_mismatch_rad <= kMaxNormalizedMismatch * (1.0 + 1e-12),
            "max phase mismatch must lie in (0, pi*sqrt(3)]");
    require(mismatch_quant_bits >= 0 && mismatch_quant_bits <= 30, "quantization bits must lie in [0, 30]");
}

CouplerDesign coupler_for(const ScenarioConfig &s) { return CouplerDesign::from_length(s.pinch_length_m); }

std::vector<Vec3> nominal_positions(const ScenarioConfig &s)
{
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(s.total_antennas()));
    const double dx = s.waveguide_spacing();
    const double dz = s.antenna_spacing();
    for (int i = 0; i < s.waveguides; ++i)
    {
        const double x = s.waveguides > 1 ? i * dx : 0.5 * s.service_width_m;
        for (int l = 0; l < s.antennas_per_waveguide; ++l)
        {
            const double z = s.antennas_per_waveguide > 1 ? s.edge_margin_m + l * dz
                                                          : s.edge_margin_m + 0.5 * s.service_length_m;
            out.push_back({x, s.ceiling_height_m, z});
        }
    }
    return out;
}

PassConfiguration build_initial_configuration(const ScenarioConfig &s)
{
    s.validate();
    PassConfiguration cfg;
    cfg.waveguides = s.waveguides;
    cfg.antennas_per_waveguide = s.antennas_per_waveguide;
    const auto n = static_cast<std::size_t>(s.total_antennas());
    cfg.mismatches.assign(n, 0.0);
    cfg.active.assign(n, 1);
    cfg.positions = nominal_positions(s);
    return cfg;
}

cd unit_phasor_neg(double x)
{
    const double r = std::remainder(x, kTwoPi);
    return {std::cos(r), -std::sin(r)};
}

CDiagonal propagation_matrix(const PassConfiguration &cfg, const ScenarioConfig &s)
{
    const double alpha = s.alpha_np();
    const double beta = s.guide_beta();
    CDiagonal g(cfg.size());
    for (int n = 0; n < cfg.size(); ++n)
    {
        const double z = cfg.positions[static_cast<std::size_t>(n)].z;
        g.diagonal()(n) = std::exp(-alpha * z) * unit_phasor_neg(beta * z);
    }
    return g;
}

CMatrix radiation_matrix(const PassConfiguration &cfg, const CouplerDesign &d)
{
    const double length = d.antenna_length();
    CMatrix a = CMatrix::Zero(cfg.size(), cfg.waveguides);
    for (int i = 0; i < cfg.waveguides; ++i)
    {
        cd cascade(1.0, 0.0);
        for (int l = 0; l < cfg.antennas_per_waveguide; ++l)
        {
            const int n = cfg.index(i, l);
            const auto t = transmission_pair_normalized(cfg.mismatches[static_cast<std::size_t>(n)] * length);
            a(n, i) = cascade * t.t_radiate;
            cascade *= t.t_through;
        }
    }
    return a;
}

cd channel_coefficient(double dist, double wavelength)
{
    if (!(dist > 0.0))
        throw std::domain_error("channel_coefficient: distance must be positive");
    return (wavelength / (2.0 * kTwoPi * dist)) * unit_phasor_neg(kTwoPi * dist / wavelength);
}

CVector channel_vector(const Vec3 &user, const std::vector<Vec3> &antennas, double wavelength)
{
    CVector h(static_cast<Eigen::Index>(antennas.size()));
    for (std::size_t n = 0; n < antennas.size(); ++n)
        h(static_cast<Eigen::Index>(n)) = std::conj(channel_coefficient(distance(user, antennas[n]), wavelength));
    return h;
}

CVector channel_vector(const Vec3 &user, const PassConfiguration &cfg, const ScenarioConfig &s)
{
    return channel_vector(user, cfg.positions, s.wavelength());
}

CMatrix channel_rows(const UserSet &users, const std::vector<Vec3> &antennas, double wavelength)
{
    CMatrix h(users.size(), static_cast<Eigen::Index>(antennas.size()));
    for (int k = 0; k < users.size(); ++k)
        for (std::size_t n = 0; n < antennas.size(); ++n)
            h(k, static_cast<Eigen::Index>(n)) =
                channel_coefficient(distance(users.positions[static_cast<std::size_t>(k)], antennas[n]), wavelength);
    return h;
}

CMatrix effective_channels(const UserSet &users, const PassConfiguration &cfg, const ScenarioConfig &s,
                           const CouplerDesign &d)
{
    const CMatrix h = channel_rows(users, cfg.positions, s.wavelength());
    return h * propagation_matrix(cfg, s) * radiation_matrix(cfg, d);
}

std::vector<double> radiated_powers(const PassConfiguration &cfg, const ScenarioConfig &s, const CouplerDesign &d)
{
    const CMatrix a = radiation_matrix(cfg, d);
    const double alpha = s.alpha_np();
    std::vector<double> out(static_cast<std::size_t>(cfg.size()));
    for (int i = 0; i < cfg.waveguides; ++i)
        for (int l = 0; l < cfg.antennas_per_waveguide; ++l)
        {
            const int n = cfg.index(i, l);
            out[static_cast<std::size_t>(n)] =
                std::norm(a(n, i)) * std::exp(-2.0 * alpha * cfg.positions[static_cast<std::size_t>(n)].z);
        }
    return out;
}

std::vector<double> residual_powers(const PassConfiguration &cfg, const ScenarioConfig &s, const CouplerDesign &d)
{
    const double length = d.antenna_length();
    const double alpha = s.alpha_np();
    std::vector<double> out(static_cast<std::size_t>(cfg.waveguides), 1.0);
    for (int i = 0; i < cfg.waveguides; ++i)
    {
        double through = 1.0;
        double z_end = 0.0;
        for (int l = 0; l < cfg.antennas_per_waveguide; ++l)
        {
            const auto n = static_cast<std::size_t>(cfg.index(i, l));
            through *= std::norm(transmission_pair_normalized(cfg.mismatches[n] * length).t_through);
            z_end = cfg.positions[n].z;
        }
        out[static_cast<std::size_t>(i)] = through * std::exp(-2.0 * alpha * z_end);
    }
    return out;
}

} // namespace pass
