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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace pass;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("default scenario derived quantities")
{
    const ScenarioConfig s;
    CHECK_THAT(s.wavelength(), WithinRel(299792458.0 / 28e9, 1e-15));
    CHECK_THAT(s.wavelength(), WithinAbs(0.0107068735, 1e-10));
    CHECK_THAT(s.alpha_np(), WithinRel(0.08 * std::log(10.0) / 20.0, 1e-15));
    CHECK_THAT(s.waveguide_spacing(), WithinAbs(1.25, 1e-15));
    CHECK_THAT(s.antenna_spacing(), WithinAbs(6.0, 1e-15));
    CHECK_THAT(s.deployment_length_m(), WithinAbs(50.0, 0.0));
    CHECK_THAT(s.displacement_range(), WithinAbs(4.995, 0.0));
    CHECK_THAT(s.noise_mw(), WithinRel(1e-11, 1e-12));
    CHECK_THAT(s.max_power_mw(), WithinRel(std::pow(10.0, 1.5), 1e-15));
    CHECK(s.total_antennas() == 30);
    CHECK_NOTHROW(s.validate());

    ScenarioConfig open = s;
    open.max_displacement_m.reset();
    CHECK_THAT(open.displacement_range(), WithinAbs(6.0 - 0.5 * s.wavelength(), 1e-15));
}

TEST_CASE("scenario validation")
{
    ScenarioConfig s;
    s.users = 0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.max_phase_mismatch_rad = 6.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.attenuation_db_per_m = -1.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = {};
    s.mismatch_quant_bits = 31;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("nominal grid")
{
    const ScenarioConfig s;
    const auto cfg = build_initial_configuration(s);
    REQUIRE(cfg.size() == 30);
    for (int i = 0; i < 5; ++i)
        for (int l = 0; l < 6; ++l)
        {
            const auto &p = cfg.positions[static_cast<std::size_t>(cfg.index(i, l))];
            CHECK_THAT(p.x, WithinAbs(1.25 * i, 1e-12));
            CHECK(p.y == 10.0);
            CHECK_THAT(p.z, WithinAbs(10.0 + 6.0 * l, 1e-12));
            CHECK(cfg.active[static_cast<std::size_t>(cfg.index(i, l))] == 1);
            CHECK(cfg.mismatches[static_cast<std::size_t>(cfg.index(i, l))] == 0.0);
        }

    ScenarioConfig one = s;
    one.waveguides = 1;
    one.antennas_per_waveguide = 1;
    const auto p = nominal_positions(one);
    REQUIRE(p.size() == 1);
    CHECK(p[0].x == 2.5);
    CHECK(p[0].z == 25.0);
}

TEST_CASE("in-guide propagation")
{
    const ScenarioConfig s;
    const auto cfg = build_initial_configuration(s);
    const auto g = propagation_matrix(cfg, s);
    // antenna 0 sits 10 m from the feed: 0.8 dB of loss in power
    CHECK_THAT(std::abs(g.diagonal()(0)), WithinAbs(std::pow(10.0, -0.04), 1e-15));
    CHECK_THAT(std::abs(g.diagonal()(0)), WithinAbs(0.9120108393559098, 1e-15));
    const double phase = 2 * kPi / s.wavelength() * 1.4 * 10.0;
    CHECK(std::abs(g.diagonal()(0) - std::polar(std::pow(10.0, -0.04), -phase)) < 1e-9);
    CHECK(std::abs(unit_phasor_neg(1e6) - std::polar(1.0, -1e6)) < 1e-9);
}

TEST_CASE("free-space coefficient")
{
    const double lambda = ScenarioConfig{}.wavelength();
    const cd h = channel_coefficient(10.0, lambda);
    CHECK_THAT(std::abs(h), WithinRel(lambda / (4 * kPi * 10.0), 1e-14));
    CHECK_THAT(std::abs(h), WithinRel(8.520259212923112e-05, 1e-12));
    CHECK_THAT(20 * std::log10(std::abs(h)), WithinAbs(-81.39, 0.01));
    CHECK_THROWS_AS(channel_coefficient(0.0, lambda), std::domain_error);

    const std::vector<Vec3> ant = {{0, 10, 10}, {0, 10, 16}};
    const Vec3 u{0, 0, 10};
    const auto v = channel_vector(u, ant, lambda);
    UserSet users{{u}};
    const auto rows = channel_rows(users, ant, lambda);
    CHECK(std::abs(v(0) - std::conj(rows(0, 0))) < 1e-20);
    CHECK(std::abs(v(1) - std::conj(rows(0, 1))) < 1e-20);
}

TEST_CASE("radiation matrix is a block-diagonal coupler cascade")
{
    ScenarioConfig s;
    s.waveguides = 2;
    s.antennas_per_waveguide = 3;
    const auto d = coupler_for(s);
    auto cfg = build_initial_configuration(s);
    cfg.mismatches = {40.0, 90.0, 0.0, 10.0, 150.0, 60.0};
    const auto a = radiation_matrix(cfg, d);
    REQUIRE(a.rows() == 6);
    REQUIRE(a.cols() == 2);
    for (int i = 0; i < 2; ++i)
    {
        cd through(1.0, 0.0);
        for (int l = 0; l < 3; ++l)
        {
            const int n = cfg.index(i, l);
            const auto t = transmission_pair_normalized(cfg.mismatches[static_cast<std::size_t>(n)] * 0.03);
            CHECK(std::abs(a(n, i) - through * t.t_radiate) < 1e-15);
            CHECK(a(n, 1 - i) == cd(0.0, 0.0));
            through *= t.t_through;
        }
    }
}

TEST_CASE("power bookkeeping")
{
    ScenarioConfig s;
    s.attenuation_db_per_m = 0.0;
    const auto d = coupler_for(s);
    auto cfg = build_initial_configuration(s);
    for (std::size_t n = 0; n < cfg.mismatches.size(); ++n)
        cfg.mismatches[n] = 17.0 * static_cast<double>(n % 7);
    const auto rad = radiated_powers(cfg, s, d);
    const auto res = residual_powers(cfg, s, d);
    for (int i = 0; i < cfg.waveguides; ++i)
    {
        double total = res[static_cast<std::size_t>(i)];
        for (int l = 0; l < cfg.antennas_per_waveguide; ++l)
            total += rad[static_cast<std::size_t>(cfg.index(i, l))];
        CHECK_THAT(total, WithinAbs(1.0, 1e-12));
    }

    s.attenuation_db_per_m = 0.08;
    const auto rad_lossy = radiated_powers(cfg, s, d);
    for (std::size_t n = 0; n < rad.size(); ++n)
        CHECK(rad_lossy[n] <= rad[n]);
}

TEST_CASE("effective channels equal the explicit triple product")
{
    ScenarioConfig s;
    s.users = 3;
    const auto d = coupler_for(s);
    auto cfg = build_initial_configuration(s);
    for (std::size_t n = 0; n < cfg.mismatches.size(); ++n)
        cfg.mismatches[n] = 5.0 * static_cast<double>(n);
    const UserSet users{{{1.0, 0.0, 12.0}, {3.0, 0.0, 25.0}, {4.5, 0.0, 38.0}}};
    const auto c = effective_channels(users, cfg, s, d);
    const auto g = propagation_matrix(cfg, s);
    const auto a = radiation_matrix(cfg, d);
    for (int k = 0; k < 3; ++k)
    {
        const auto h = channel_vector(users.positions[static_cast<std::size_t>(k)], cfg, s);
        for (int i = 0; i < cfg.waveguides; ++i)
        {
            cd acc(0.0, 0.0);
            for (int n = 0; n < cfg.size(); ++n)
                acc += std::conj(h(n)) * g.diagonal()(n) * a(n, i);
            CHECK(std::abs(c(k, i) - acc) < 1e-18);
        }
    }
}
