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

#include "mubeam/precoders.hpp"

#include "mubeam/numkern.hpp"

namespace mubeam {

std::string_view to_string(Scheme s)
{
    switch (s) {
    case Scheme::steer: return "steer";
    case Scheme::zf: return "zf";
    case Scheme::ge: return "ge";
    case Scheme::scalar_ub: return "scalar_ub";
    case Scheme::alt_opt: return "alt_opt";
    case Scheme::mrt_mrc_zf: return "mrt_mrc_zf";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name)
{
    for (auto s : {Scheme::steer, Scheme::zf, Scheme::ge, Scheme::scalar_ub, Scheme::alt_opt,
                   Scheme::mrt_mrc_zf})
        if (to_string(s) == name)
            return s;
    throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

double PrecoderSet::total_power() const
{
    double p = 0.0;
    for (const auto &f : beams)
        p += f.squaredNorm();
    return p;
}

CMatrix stack_rows(std::span<const CRowVector> rows)
{
    if (rows.empty())
        throw DimensionMismatch("stack_rows: no rows");
    CMatrix out(static_cast<Eigen::Index>(rows.size()), rows.front().size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != out.cols())
            throw DimensionMismatch("stack_rows: rows differ in length");
        out.row(static_cast<Eigen::Index>(k)) = rows[k];
    }
    return out;
}

PrecoderSet zf_beams(const CMatrix &rows)
{
    if (rows.rows() < 1 || rows.rows() > rows.cols())
        throw RankDeficient("zf_beams: need 1 <= K <= N_t rows");
    const Eigen::JacobiSVD<CMatrix> svd(rows);
    const auto &sv = svd.singularValues();
    if (!(sv(sv.size() - 1) > 1e-10 * sv(0)))
        throw RankDeficient("zf_beams: user rows are (nearly) linearly dependent");

    // R^H = Q T gives R^H (R R^H)^{-1} = Q T^{-H}, avoiding the squared condition number.
    const auto K = rows.rows();
    const Eigen::HouseholderQR<CMatrix> qr(rows.adjoint());
    const CMatrix q = qr.householderQ() * CMatrix::Identity(rows.cols(), K);
    const CMatrix t = qr.matrixQR().topRows(K).triangularView<Eigen::Upper>();
    const CMatrix w =
        q * t.adjoint().triangularView<Eigen::Lower>().solve(CMatrix::Identity(K, K));

    PrecoderSet out;
    out.scheme = Scheme::zf;
    for (Eigen::Index k = 0; k < w.cols(); ++k)
        out.beams.push_back(w.col(k).normalized());
    return out;
}

PrecoderSet steer_best(std::span<const BeamReport> reports, const Codebook &tx)
{
    PrecoderSet out;
    out.scheme = Scheme::steer;
    for (const auto &r : reports) {
        if (r.rows.empty())
            throw BadIndex("steer_best: empty report");
        const int n = r.rows.front().n_idx;
        if (n < 0 || n >= tx.size())
            throw BadIndex("steer_best: beam index outside codebook");
        out.beams.push_back(tx[n]);
    }
    return out;
}

CVector ge_beam(int k, const CMatrix &rows, const RMatrix &eta)
{
    const auto K = rows.rows();
    if (k < 0 || k >= K || eta.rows() != K || eta.cols() != K)
        throw DimensionMismatch("ge_beam: user index or weight matrix does not match rows");
    const auto nt = rows.cols();
    CMatrix b = CMatrix::Identity(nt, nt);
    for (Eigen::Index m = 0; m < K; ++m) {
        if (m == k || eta(m, k) == 0.0)
            continue;
        if (!(eta(m, k) >= 0))
            throw OutOfRange("ge_beam: weights must be nonnegative");
        b.noalias() += eta(m, k) * rows.row(m).adjoint() * rows.row(m);
    }
    return numkern::generalized_dominant_eigvec_rank1(rows.row(k).adjoint(), b);
}

PrecoderSet ge_beams(const CMatrix &rows, const RMatrix &eta)
{
    PrecoderSet out;
    out.scheme = Scheme::ge;
    for (int k = 0; k < rows.rows(); ++k)
        out.beams.push_back(ge_beam(k, rows, eta));
    return out;
}

RMatrix uniform_eta(int K, double weight)
{
    RMatrix eta = RMatrix::Constant(K, K, weight);
    eta.diagonal().setZero();
    return eta;
}

PrecoderSet quantize_precoder(const PrecoderSet &p, const BeamQuantSpec &spec)
{
    PrecoderSet out = p;
    out.quantized = true;
    for (auto &f : out.beams)
        f = quantize_beam(f, spec);
    return out;
}

} // namespace mubeam
