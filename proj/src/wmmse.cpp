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

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace pass
{

namespace
{

void check_dims(const EffectiveChannels &channels, const PrecoderSet &precoders)
{
    if (precoders.vectors.rows() != channels.cols() || precoders.vectors.cols() != channels.rows())
        throw std::invalid_argument("wmmse: channel and precoder dimensions disagree");
}

struct BeamformerStep
{
    CMatrix w;
    double lambda;
};

// Minimizes the weighted MSE over all beamformers subject to the power budget.
BeamformerStep solve_beamformers(const CMatrix &phi, const CMatrix &rhs, double p_max)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(phi);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("wmmse: eigendecomposition failed");
    const Eigen::VectorXd &ev = eig.eigenvalues();
    const CMatrix &u = eig.eigenvectors();
    const CMatrix projected = u.adjoint() * rhs;
    const Eigen::VectorXd row_energy = projected.rowwise().squaredNorm();

    const double ev_max = ev.size() > 0 ? std::max(ev.maxCoeff(), 0.0) : 0.0;
    const double floor = 1e-12 * std::max(ev_max, std::numeric_limits<double>::min());

    auto power_at = [&](double lambda) {
        double p = 0.0;
        for (Eigen::Index i = 0; i < ev.size(); ++i)
        {
            const double e = std::max(ev(i), 0.0) + lambda;
            if (lambda == 0.0 && e <= floor)
                continue; // null space of phi: contributes nothing to the objective
            p += row_energy(i) / (e * e);
        }
        return p;
    };
    auto build = [&](double lambda) {
        Eigen::VectorXd scale(ev.size());
        for (Eigen::Index i = 0; i < ev.size(); ++i)
        {
            const double e = std::max(ev(i), 0.0) + lambda;
            scale(i) = (lambda == 0.0 && e <= floor) ? 0.0 : 1.0 / e;
        }
        return CMatrix(u * (scale.asDiagonal() * projected));
    };

    if (power_at(0.0) <= p_max)
        return {build(0.0), 0.0};

    double hi = 1.0;
    for (int it = 0; it < 2000 && power_at(hi) > p_max; ++it)
        hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 300; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double p = power_at(mid);
        if (p > p_max)
            lo = mid;
        else
            hi = mid;
        if (std::abs(p - p_max) <= 1e-12 * p_max && p <= p_max)
            break;
    }
    return {build(hi), hi};
}

} // namespace

std::vector<double> sinr(const EffectiveChannels &channels, const PrecoderSet &precoders, double noise_mw)
{
    check_dims(channels, precoders);
    const CMatrix gains = channels * precoders.vectors;
    const auto users = static_cast<int>(channels.rows());
    std::vector<double> out(static_cast<std::size_t>(users));
    for (int k = 0; k < users; ++k)
    {
        const double total = gains.row(k).squaredNorm();
        const double own = std::norm(gains(k, k));
        out[static_cast<std::size_t>(k)] = own / ((total - own) + noise_mw);
    }
    return out;
}

double sum_rate(const EffectiveChannels &channels, const PrecoderSet &precoders, double noise_mw)
{
    double rate = 0.0;
    for (double s : sinr(channels, precoders, noise_mw))
        rate += std::log2(1.0 + s);
    return rate;
}

double mse(cd u, const Eigen::RowVectorXcd &c_k, const PrecoderSet &precoders, int k, double noise_mw)
{
    const Eigen::RowVectorXcd gains = c_k * precoders.vectors;
    double e = std::norm(1.0 - u * gains(k)) + noise_mw * std::norm(u);
    for (Eigen::Index j = 0; j < gains.size(); ++j)
        if (j != k)
            e += std::norm(u * gains(j));
    return e;
}

PrecoderSet matched_filter_init(const EffectiveChannels &channels, double p_max_mw)
{
    const auto users = static_cast<int>(channels.rows());
    PrecoderSet w = PrecoderSet::zeros(static_cast<int>(channels.cols()), users);
    const double share = std::sqrt(p_max_mw / std::max(users, 1));
    for (int k = 0; k < users; ++k)
    {
        const double norm = channels.row(k).norm();
        if (norm > 0.0)
            w.vectors.col(k) = share / norm * channels.row(k).adjoint();
    }
    return w;
}

WmmseResult wmmse_solve(const EffectiveChannels &channels, double p_max_mw, double noise_mw,
                        const std::optional<PrecoderSet> &init, const WmmseOptions &options)
{
    if (!(p_max_mw > 0.0) || !(noise_mw > 0.0))
        throw std::invalid_argument("wmmse_solve: power budget and noise must be positive");

    const auto users = static_cast<int>(channels.rows());
    const auto dim = static_cast<int>(channels.cols());

    WmmseResult out;
    out.aux.receivers.assign(static_cast<std::size_t>(users), cd(0.0, 0.0));
    out.aux.weights.assign(static_cast<std::size_t>(users), 1.0);

    if (channels.squaredNorm() == 0.0)
    {
        out.precoders = PrecoderSet::zeros(dim, users);
        out.rate_trajectory = {0.0};
        return out;
    }

    PrecoderSet w = init ? *init : matched_filter_init(channels, p_max_mw);
    check_dims(channels, w);
    if (w.total_power() > p_max_mw)
        w.vectors *= std::sqrt(p_max_mw / w.total_power());

    double rate = sum_rate(channels, w, noise_mw);
    out.rate_trajectory.push_back(rate);

    for (int it = 0; it < options.max_iterations; ++it)
    {
        const CMatrix gains = channels * w.vectors;
        CMatrix phi = CMatrix::Zero(dim, dim);
        CMatrix rhs(dim, users);
        for (int k = 0; k < users; ++k)
        {
            const double denom = gains.row(k).squaredNorm() + noise_mw;
            const cd u = std::conj(gains(k, k)) / denom;
            const double e = mse(u, channels.row(k), w, k, noise_mw);
            const double v = 1.0 / e;
            out.aux.receivers[static_cast<std::size_t>(k)] = u;
            out.aux.weights[static_cast<std::size_t>(k)] = v;
            phi.noalias() += (v * std::norm(u)) * channels.row(k).adjoint() * channels.row(k);
            rhs.col(k) = (v * std::conj(u)) * channels.row(k).adjoint();
        }
        phi = 0.5 * (phi + phi.adjoint()).eval();

        const BeamformerStep step = solve_beamformers(phi, rhs, p_max_mw);
        w.vectors = step.w;
        out.lagrange_multiplier = step.lambda;

        const double next = sum_rate(channels, w, noise_mw);
        out.rate_trajectory.push_back(next);
        const double change = std::abs(next - rate) / std::max(std::abs(rate), 1e-300);
        rate = next;
        if (change < options.rel_tolerance)
            break;
    }

    out.precoders = std::move(w);
    return out;
}

} // namespace pass
