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

#include "pass/wmmse.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace pass;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

CMatrix random_channels(int k, int n, double scale, std::mt19937_64 &rng)
{
    std::normal_distribution<double> g(0.0, scale);
    CMatrix c(k, n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            c(i, j) = cd(g(rng), g(rng));
    return c;
}

} // namespace

TEST_CASE("sinr and sum rate by hand")
{
    CMatrix c(2, 2);
    c << cd(1, 0), cd(0, 0.5), cd(0.2, 0), cd(1, 1);
    PrecoderSet w{CMatrix::Identity(2, 2)};
    const double noise = 0.1;
    const auto s = sinr(c, w, noise);
    const double s0 = 1.0 / (0.25 + noise);
    const double s1 = 2.0 / (0.04 + noise);
    CHECK_THAT(s[0], WithinRel(s0, 1e-14));
    CHECK_THAT(s[1], WithinRel(s1, 1e-14));
    CHECK_THAT(sum_rate(c, w, noise), WithinRel(std::log2(1 + s0) + std::log2(1 + s1), 1e-14));
}

TEST_CASE("MMSE receiver gives e = 1 / (1 + SINR)")
{
    std::mt19937_64 rng(4);
    const CMatrix c = random_channels(3, 4, 1.0, rng);
    const PrecoderSet w = matched_filter_init(c, 2.0);
    const double noise = 0.3;
    const auto s = sinr(c, w, noise);
    const CMatrix gains = c * w.vectors;
    for (int k = 0; k < 3; ++k)
    {
        const cd u = std::conj(gains(k, k)) / (gains.row(k).squaredNorm() + noise);
        CHECK_THAT(mse(u, c.row(k), w, k, noise), WithinRel(1.0 / (1.0 + s[static_cast<std::size_t>(k)]), 1e-12));
    }
}

TEST_CASE("matched filter spends the budget")
{
    std::mt19937_64 rng(5);
    const CMatrix c = random_channels(4, 3, 1e-4, rng);
    CHECK_THAT(matched_filter_init(c, 7.0).total_power(), WithinRel(7.0, 1e-12));
}

TEST_CASE("single user reaches the closed-form capacity")
{
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial)
    {
        const CMatrix c = random_channels(1, 5, 1e-4, rng);
        const double p = 31.6, noise = 1e-9;
        const auto r = wmmse_solve(c, p, noise);
        const double expected = std::log2(1.0 + p * c.squaredNorm() / noise);
        CHECK_THAT(sum_rate(c, r.precoders, noise), WithinAbs(expected, 1e-8));
        CHECK_THAT(r.precoders.total_power(), WithinRel(p, 1e-6));
    }
}

TEST_CASE("block coordinate descent is monotone and feasible")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial)
    {
        const int k = 2 + trial % 4, n = 2 + (trial / 4) % 4;
        const CMatrix c = random_channels(k, n, 1e-4, rng);
        const double p = 10.0, noise = 1e-9;
        const auto r = wmmse_solve(c, p, noise);
        for (std::size_t i = 1; i < r.rate_trajectory.size(); ++i)
            CHECK(r.rate_trajectory[i] >= r.rate_trajectory[i - 1] - 1e-9);
        CHECK(r.precoders.total_power() <= p * (1 + 1e-6));
        CHECK(r.lagrange_multiplier >= 0.0);
        CHECK_THAT(sum_rate(c, r.precoders, noise), WithinAbs(r.rate_trajectory.back(), 1e-9));
    }
}

TEST_CASE("more power never hurts the solution")
{
    std::mt19937_64 rng(8);
    const CMatrix c = random_channels(1, 3, 1.0, rng);
    double prev = 0.0;
    for (double p : {0.1, 1.0, 10.0, 100.0})
    {
        const double r = sum_rate(c, wmmse_solve(c, p, 1.0).precoders, 1.0);
        CHECK(r > prev);
        prev = r;
    }
}

TEST_CASE("degenerate inputs")
{
    const CMatrix zero = CMatrix::Zero(2, 3);
    const auto r = wmmse_solve(zero, 1.0, 1.0);
    CHECK(r.precoders.total_power() == 0.0);
    CHECK(r.rate_trajectory == std::vector<double>{0.0});
    CHECK_THROWS_AS(wmmse_solve(zero, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(wmmse_solve(zero, 1.0, 0.0), std::invalid_argument);

    std::mt19937_64 rng(9);
    const CMatrix c = random_channels(2, 3, 1.0, rng);
    CHECK_THROWS(wmmse_solve(c, 1.0, 1.0, PrecoderSet::zeros(2, 2)));
}

TEST_CASE("warm start is scaled into the budget")
{
    std::mt19937_64 rng(10);
    const CMatrix c = random_channels(2, 2, 1.0, rng);
    PrecoderSet big{CMatrix::Constant(2, 2, cd(10.0, 0.0))};
    WmmseOptions opt;
    opt.max_iterations = 0;
    const auto r = wmmse_solve(c, 1.0, 0.1, big, opt);
    CHECK_THAT(r.precoders.total_power(), WithinRel(1.0, 1e-12));
}
