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

#pragma once

#include <vector>

#include "mubeam/types.hpp"

namespace mubeam {

/// Uniform planar array with half-wavelength spacing. Element (p, q) lives at
/// flat index q * n_x + p.
struct ArrayGeometry {
    int n_x = 1;
    int n_z = 1;

    int size() const { return n_x * n_z; }
    bool operator==(const ArrayGeometry &) const = default;
};

/// Angular sector in radians. Zenith is measured from the array's vertical axis.
struct SectorSpec {
    double az_min = 0.0;
    double az_max = 0.0;
    double zen_min = 0.0;
    double zen_max = 0.0;

    void validate() const;
    bool operator==(const SectorSpec &) const = default;
};

/// 120 x 30 degree base-station coverage, centered on broadside.
SectorSpec default_aod_sector();
/// 120 x 120 degree user coverage, centered on broadside.
SectorSpec default_aoa_sector();

struct ClusterParams {
    cd gain;
    double aod_az = 0.0;
    double aod_zen = 0.0;
    double aoa_az = 0.0;
    double aoa_zen = 0.0;
};

struct ChannelRealization {
    CMatrix H; // N_r x N_t
    std::vector<ClusterParams> clusters;
    int L = 0;
    ArrayGeometry tx;
    ArrayGeometry rx;
};

/// Unit-norm UPA response:
///   v(p, q) = exp(j pi (p sin(zen) sin(az) + q cos(zen))) / sqrt(n_x n_z).
CVector steering_vector(const ArrayGeometry &geom, double az, double zen);

/// sqrt(N_r N_t / L) * sum_l gain_l u_l v_l^H for the given clusters.
CMatrix assemble_channel(const ArrayGeometry &tx, const ArrayGeometry &rx,
                         const std::vector<ClusterParams> &clusters);

/// Draws L clusters with CN(0,1) gains and angles uniform over the sectors.
ChannelRealization draw_channel(const ArrayGeometry &tx, const ArrayGeometry &rx, int L,
                                const SectorSpec &aod, const SectorSpec &aoa, Rng &rng);

} // namespace mubeam
