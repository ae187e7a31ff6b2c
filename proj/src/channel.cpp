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

#include "mubeam/channel.hpp"

#include <cmath>

namespace mubeam {

namespace {
constexpr double deg = kPi / 180.0;
}

void SectorSpec::validate() const
{
    if (!(az_min < az_max) || !(zen_min < zen_max))
        throw OutOfRange("SectorSpec: bounds must satisfy min < max");
}

SectorSpec default_aod_sector() { return {-60 * deg, 60 * deg, 75 * deg, 105 * deg}; }
SectorSpec default_aoa_sector() { return {-60 * deg, 60 * deg, 30 * deg, 150 * deg}; }

CVector steering_vector(const ArrayGeometry &geom, double az, double zen)
{
    if (geom.n_x < 1 || geom.n_z < 1)
        throw DimensionMismatch("steering_vector: array dimensions must be positive");
    const double ux = std::sin(zen) * std::sin(az);
    const double uz = std::cos(zen);
    const double amp = 1.0 / std::sqrt(static_cast<double>(geom.size()));
    CVector v(geom.size());
    for (int q = 0; q < geom.n_z; ++q)
        for (int p = 0; p < geom.n_x; ++p)
            v(q * geom.n_x + p) = std::polar(amp, kPi * (p * ux + q * uz));
    return v;
}

CMatrix assemble_channel(const ArrayGeometry &tx, const ArrayGeometry &rx,
                         const std::vector<ClusterParams> &clusters)
{
    if (clusters.empty())
        throw OutOfRange("assemble_channel: need at least one cluster");
    const double scale =
        std::sqrt(static_cast<double>(rx.size()) * tx.size() / static_cast<double>(clusters.size()));
    CMatrix h = CMatrix::Zero(rx.size(), tx.size());
    for (const auto &c : clusters) {
        const CVector u = steering_vector(rx, c.aoa_az, c.aoa_zen);
        const CVector v = steering_vector(tx, c.aod_az, c.aod_zen);
        h.noalias() += (c.gain * u) * v.adjoint();
    }
    return scale * h;
}

ChannelRealization draw_channel(const ArrayGeometry &tx, const ArrayGeometry &rx, int L,
                                const SectorSpec &aod, const SectorSpec &aoa, Rng &rng)
{
    if (L < 1)
        throw OutOfRange("draw_channel: L must be >= 1");
    aod.validate();
    aoa.validate();

    std::uniform_real_distribution<double> aod_az(aod.az_min, aod.az_max);
    std::uniform_real_distribution<double> aod_zen(aod.zen_min, aod.zen_max);
    std::uniform_real_distribution<double> aoa_az(aoa.az_min, aoa.az_max);
    std::uniform_real_distribution<double> aoa_zen(aoa.zen_min, aoa.zen_max);

    ChannelRealization out;
    out.L = L;
    out.tx = tx;
    out.rx = rx;
    out.clusters.reserve(L);
    for (int l = 0; l < L; ++l) {
        ClusterParams c;
        c.gain = complex_normal(rng);
        c.aod_az = aod_az(rng);
        c.aod_zen = aod_zen(rng);
        c.aoa_az = aoa_az(rng);
        c.aoa_zen = aoa_zen(rng);
        out.clusters.push_back(c);
    }
    out.H = assemble_channel(tx, rx, out.clusters);
    return out;
}

} // namespace mubeam
