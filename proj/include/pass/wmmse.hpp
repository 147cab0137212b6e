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

#ifndef PASS_WMMSE_HPP
#define PASS_WMMSE_HPP

#include "pass/pass_array.hpp"

#include <optional>
#include <vector>

namespace pass
{

/// Rows c_k of the composite channel seen by the digital precoder, K x N_w.
using EffectiveChannels = CMatrix;

/// Digital beamformers; column k is w_k (N_w x K).
struct PrecoderSet
{
    CMatrix vectors;

    int users() const { return static_cast<int>(vectors.cols()); }
    double total_power() const { return vectors.squaredNorm(); }
    static PrecoderSet zeros(int dimension, int users) { return {CMatrix::Zero(dimension, users)}; }
};

struct WmmseAux
{
    std::vector<cd> receivers;   // u_k
    std::vector<double> weights; // v_k
};

struct WmmseOptions
{
    int max_iterations = 100;
    double rel_tolerance = 1e-4;
};

struct WmmseResult
{
    PrecoderSet precoders;
    WmmseAux aux;
    std::vector<double> rate_trajectory; // initial point first, then one entry per sweep
    double lagrange_multiplier = 0.0;
};

std::vector<double> sinr(const EffectiveChannels &channels, const PrecoderSet &precoders, double noise_mw);

/// Sum of log2(1 + SINR_k), bps/Hz.
double sum_rate(const EffectiveChannels &channels, const PrecoderSet &precoders, double noise_mw);

/// e_k = |1 - u c_k w_k|^2 + sum_{j != k} |u c_k w_j|^2 + noise |u|^2.
double mse(cd u, const Eigen::RowVectorXcd &c_k, const PrecoderSet &precoders, int k, double noise_mw);

/// Matched filter with an equal p_max / K share per user (zero for all-zero rows).
PrecoderSet matched_filter_init(const EffectiveChannels &channels, double p_max_mw);

/**
 * Weighted-MMSE block coordinate descent for the total-power-constrained sum rate.
 *
 * Each sweep sets the MMSE receivers, the MSE weights and then the beamformers
 *   w_k = v_k conj(u_k) (sum_j v_j |u_j|^2 c_j^H c_j + lambda I)^-1 c_k^H,
 * with lambda = 0 when that already meets the budget and otherwise chosen by bisection so the
 * budget is tight. Stops when the sum rate moves by less than rel_tolerance (relative).
 */
WmmseResult wmmse_solve(const EffectiveChannels &channels, double p_max_mw, double noise_mw,
                        const std::optional<PrecoderSet> &init = std::nullopt, const WmmseOptions &options = {});

} // namespace pass

#endif
