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

#include "mubeam/alignment.hpp"

#include <algorithm>
#include <numeric>

namespace mubeam {

SnrTable sweep_snr(const CMatrix &H, const Codebook &tx, const Codebook &rx)
{
    if (H.cols() != tx.geom.size() || H.rows() != rx.geom.size())
        throw DimensionMismatch("sweep_snr: channel does not match codebook geometries");
    const CMatrix gain = rx.matrix().adjoint() * H * tx.matrix();
    return gain.cwiseAbs2();
}

TopPairs top_pairs(const SnrTable &table, int P)
{
    const auto M = static_cast<int>(table.rows());
    const auto N = static_cast<int>(table.cols());
    if (P < 1 || P > N)
        throw OutOfRange("top_pairs: P must lie in [1, N]");

    std::vector<int> order(static_cast<std::size_t>(M) * N);
    std::iota(order.begin(), order.end(), 0);
    // Flat index m * N + n, so index order already encodes the (m, n) tie-break.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return table(a / N, a % N) > table(b / N, b % N);
    });

    std::vector<bool> used(static_cast<std::size_t>(N), false);
    TopPairs out;
    out.reserve(static_cast<std::size_t>(P));
    for (int idx : order) {
        const int m = idx / N;
        const int n = idx % N;
        if (used[static_cast<std::size_t>(n)])
            continue;
        used[static_cast<std::size_t>(n)] = true;
        out.push_back({m, n, table(m, n)});
        if (static_cast<int>(out.size()) == P)
            break;
    }
    return out;
}

double estimate_pair_phase(const CMatrix &H, const CVector &f, const CVector &g, double rho,
                           Rng &rng, bool noiseless)
{
    const cd signal = g.dot(H * f);
    if (noiseless)
        return std::arg(signal);
    return std::arg(std::sqrt(rho) * signal + complex_normal(rng));
}

} // namespace mubeam
