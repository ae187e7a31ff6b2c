// SPDX-License-Identifier: Apache-2.0
//
// mubeam: multi-user mmWave hybrid beamforming simulation library
// Copyright (C) 2026 The mubeam Authors
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

#include "mubeam/bounds.hpp"

#include <cmath>
#include <limits>

#include "mubeam/numkern.hpp"
#include "mubeam/rates.hpp"

namespace mubeam {

namespace {

CVector random_unit(Eigen::Index n, Rng &rng)
{
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) = complex_normal(rng);
    return v.normalized();
}

// Sum rate and its sphere gradient in the reduced coordinates u_m (f_m = Q u_m),
// where h_k = Q^H H_k^H g_k so that g_k^H H_k f_m = h_k^H u_m.
class ReducedSumRate {
public:
    ReducedSumRate(std::vector<CVector> h, double rho)
        : h_(std::move(h)), s_(rho / static_cast<double>(h_.size()))
    {
    }

    double value(const std::vector<CVector> &u) const
    {
        const auto K = h_.size();
        double r = 0.0;
        for (std::size_t k = 0; k < K; ++k) {
            double sig = 0.0, intf = 0.0;
            for (std::size_t m = 0; m < K; ++m)
                (m == k ? sig : intf) += std::norm(h_[k].dot(u[m]));
            r += std::log2(1.0 + s_ * sig / (1.0 + s_ * intf));
        }
        return r;
    }

    /// Tangent-space gradient with respect to each u_m (conjugate Wirtinger).
    std::vector<CVector> gradient(const std::vector<CVector> &u) const
    {
        const auto K = h_.size();
        std::vector<double> total(K), intf(K);
        for (std::size_t k = 0; k < K; ++k) {
            double sig = 0.0, other = 0.0;
            for (std::size_t m = 0; m < K; ++m)
                (m == k ? sig : other) += std::norm(h_[k].dot(u[m]));
            total[k] = 1.0 + s_ * (sig + other);
            intf[k] = 1.0 + s_ * other;
        }
        std::vector<CVector> grad(K);
        for (std::size_t m = 0; m < K; ++m) {
            CVector gm = CVector::Zero(u[m].size());
            for (std::size_t k = 0; k < K; ++k) {
                const double w = (s_ / std::log(2.0)) *
                                 (1.0 / total[k] - (m != k ? 1.0 / intf[k] : 0.0));
                gm += (w * h_[k].dot(u[m])) * h_[k];
            }
            gm -= std::real(u[m].dot(gm)) * u[m];
            grad[m] = gm;
        }
        return grad;
    }

private:
    std::vector<CVector> h_;
    double s_;
};

double ascend(const ReducedSumRate &obj, std::vector<CVector> &u, const ScalarUbOptions &opts)
{
    double value = obj.value(u);
    double step = opts.step_init;
    for (int it = 0; it < opts.max_iters; ++it) {
        const auto grad = obj.gradient(u);
        double gnorm = 0.0;
        for (const auto &gm : grad)
            gnorm += gm.squaredNorm();
        if (std::sqrt(gnorm) < opts.grad_eps)
            break;

        bool accepted = false;
        for (int halving = 0; halving < 40; ++halving) {
            std::vector<CVector> trial(u.size());
            for (std::size_t m = 0; m < u.size(); ++m)
                trial[m] = (u[m] + step * grad[m]).normalized();
            const double tv = obj.value(trial);
            if (tv > value) {
                const double gain = tv - value;
                u = std::move(trial);
                value = tv;
                accepted = true;
                step *= 2.0;
                if (gain < opts.tol)
                    return value;
                break;
            }
            step *= 0.5;
        }
        if (!accepted)
            break;
    }
    return value;
}

} // namespace

namespace detail {

double reduced_sum_rate(const std::vector<CVector> &h, const std::vector<CVector> &u, double rho)
{
    return ReducedSumRate(h, rho).value(u);
}

std::vector<CVector> reduced_sum_rate_gradient(const std::vector<CVector> &h,
                                               const std::vector<CVector> &u, double rho)
{
    return ReducedSumRate(h, rho).gradient(u);
}

} // namespace detail

ScalarUbResult scalar_ub(std::span<const CMatrix> H, std::span<const CVector> g,
                         const Codebook &tx, double rho, const ScalarUbOptions &opts,
                         std::span<const std::vector<CVector>> init_sets, Rng &rng)
{
    const auto K = H.size();
    if (K == 0 || g.size() != K)
        throw DimensionMismatch("scalar_ub: channel and receive beam counts differ");
    if (opts.restarts < 1)
        throw OutOfRange("scalar_ub: restarts must be >= 1");

    // Orthonormal basis of span(F_tr) from the thin SVD.
    const CMatrix F = tx.matrix();
    const Eigen::JacobiSVD<CMatrix> svd(F, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > 1e-10 * sv(0))
        ++rank;
    const CMatrix Q = svd.matrixU().leftCols(rank);

    std::vector<CVector> h(K);
    for (std::size_t k = 0; k < K; ++k)
        h[k] = Q.adjoint() * (H[k].adjoint() * g[k]);
    const ReducedSumRate obj(h, rho);

    const auto lift = [&](const std::vector<CVector> &u) {
        std::vector<CVector> f(K);
        for (std::size_t k = 0; k < K; ++k)
            f[k] = (Q * u[k]).normalized();
        return f;
    };

    // Candidates kept in full coordinates; the pre-ascent inits compete as-is
    // so the result never falls below any supplied beam set.
    std::vector<CVector> best_f;
    double best_rate = -std::numeric_limits<double>::infinity();
    const auto consider = [&](const std::vector<CVector> &f) {
        const double r = sum_rate(H, f, g, rho);
        if (r > best_rate) {
            best_rate = r;
            best_f = f;
        }
    };
    const auto run_from = [&](std::vector<CVector> u) {
        for (auto &uk : u) {
            if (!(uk.norm() > 0))
                uk = CVector::Unit(rank, 0);
            uk.normalize();
        }
        ascend(obj, u, opts);
        consider(lift(u));
    };

    std::vector<std::vector<CVector>> starts;
    for (const auto &set : init_sets) {
        if (set.size() != K)
            throw DimensionMismatch("scalar_ub: init set has wrong number of beams");
        consider(set);
        std::vector<CVector> u(K);
        for (std::size_t k = 0; k < K; ++k)
            u[k] = Q.adjoint() * set[k];
        starts.push_back(std::move(u));
    }

    // Matched beams inside the span, and ZF on the projected true rows.
    starts.push_back(h);
    {
        CMatrix rows(static_cast<Eigen::Index>(K), rank);
        for (std::size_t k = 0; k < K; ++k)
            rows.row(static_cast<Eigen::Index>(k)) = h[k].adjoint();
        try {
            const PrecoderSet z = zf_beams(rows);
            starts.push_back(z.beams);
        } catch (const RankDeficient &) {
        }
    }
    for (int r = 0; r < opts.restarts; ++r) {
        std::vector<CVector> u(K);
        for (auto &uk : u)
            uk = random_unit(rank, rng);
        starts.push_back(std::move(u));
    }
    for (auto &u : starts)
        run_from(std::move(u));

    ScalarUbResult out;
    out.sum_rate = best_rate;
    out.beams.scheme = Scheme::scalar_ub;
    out.beams.beams = best_f;
    const CMatrix pinv_factor = svd.matrixV().leftCols(rank) *
                                sv.head(rank).cwiseInverse().asDiagonal() * Q.adjoint();
    for (const auto &f : best_f)
        out.delta.push_back(pinv_factor * f);
    return out;
}

CVector slnr_beam(std::span<const CMatrix> H, std::span<const CVector> g, int k, double eta)
{
    const auto nt = H[0].cols();
    CMatrix b = CMatrix::Identity(nt, nt);
    for (std::size_t m = 0; m < H.size(); ++m) {
        if (static_cast<int>(m) == k || eta == 0.0)
            continue;
        const CVector leak = H[m].adjoint() * g[m];
        b.noalias() += eta * leak * leak.adjoint();
    }
    const auto ku = static_cast<std::size_t>(k);
    return numkern::generalized_dominant_eigvec_rank1(H[ku].adjoint() * g[ku], b);
}

CVector sinr_rx_beam(const CMatrix &H_k, std::span<const CVector> beams, int k, double rho)
{
    const auto nr = H_k.rows();
    const double s = rho / static_cast<double>(beams.size());
    CMatrix b = CMatrix::Identity(nr, nr);
    for (std::size_t m = 0; m < beams.size(); ++m) {
        if (static_cast<int>(m) == k)
            continue;
        const CVector intf = H_k * beams[m];
        b.noalias() += s * intf * intf.adjoint();
    }
    return numkern::generalized_dominant_eigvec_rank1(H_k * beams[static_cast<std::size_t>(k)], b);
}

AltOptResult alternating_opt(std::span<const CMatrix> H, double rho, const AltOptOptions &opts,
                             Rng &rng)
{
    const auto K = H.size();
    if (K == 0)
        throw DimensionMismatch("alternating_opt: no users");
    if (opts.n_stop < 1 || opts.eta_grid.empty())
        throw OutOfRange("alternating_opt: need n_stop >= 1 and a non-empty weight grid");
    const double unit = rho / static_cast<double>(K);

    AltOptResult res;
    res.rx_beams.resize(K);
    for (std::size_t k = 0; k < K; ++k)
        res.rx_beams[k] = random_unit(H[k].rows(), rng);
    res.beams.resize(K);
    for (std::size_t k = 0; k < K; ++k)
        res.beams[k] = (H[k].adjoint() * res.rx_beams[k]).normalized();

    for (int it = 1; it <= opts.n_stop; ++it) {
        // Transmit step: per user, the generalized Rayleigh beam for each weight on the grid;
        // keep the one giving the largest sum rate with the other beams fixed.
        for (std::size_t k = 0; k < K; ++k) {
            CVector best = res.beams[k];
            double best_rate = -std::numeric_limits<double>::infinity();
            for (double factor : opts.eta_grid) {
                res.beams[k] = slnr_beam(H, res.rx_beams, static_cast<int>(k), factor * unit);
                const double r = sum_rate(H, res.beams, res.rx_beams, rho);
                if (r > best_rate) {
                    best_rate = r;
                    best = res.beams[k];
                }
            }
            res.beams[k] = best;
        }
        // Receive step: max-SINR combiner at fixed transmit beams.
        for (std::size_t k = 0; k < K; ++k)
            res.rx_beams[k] = sinr_rx_beam(H[k], res.beams, static_cast<int>(k), rho);

        const double r = sum_rate(H, res.beams, res.rx_beams, rho);
        res.history.push_back(r);
        res.sum_rate = r;
        res.n_iters = it;
        if (it > 1 && std::abs(r - res.history[res.history.size() - 2]) < opts.tol) {
            res.converged = true;
            break;
        }
    }
    return res;
}

MrtMrcZfResult mrt_mrc_zf(std::span<const CMatrix> H, double /*rho*/)
{
    MrtMrcZfResult out;
    CMatrix rows(static_cast<Eigen::Index>(H.size()), H.empty() ? 0 : H[0].cols());
    for (std::size_t k = 0; k < H.size(); ++k) {
        const CMatrix gram = H[k] * H[k].adjoint();
        CVector g;
        try {
            g = numkern::dominant_eigvec(gram);
        } catch (const NoConvergence &) {
            // Degenerate top singular value: any vector of the top eigenspace will do.
            Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
            g = es.eigenvectors().col(gram.rows() - 1);
        }
        out.rx_beams.push_back(g);
        rows.row(static_cast<Eigen::Index>(k)) = g.adjoint() * H[k];
    }
    out.beams = zf_beams(rows);
    out.beams.scheme = Scheme::mrt_mrc_zf;
    return out;
}

} // namespace mubeam
