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

#include <string>
#include <string_view>
#include <vector>

#include "mubeam/channel.hpp"

namespace mubeam {

/// Ordered unit-norm beams for one array. Each beam is a plane wave with
/// direction cosines (ux, uz): phase pi (p ux + q uz) on element (p, q).
struct Codebook {
    std::vector<CVector> beams;
    std::vector<double> ux;
    std::vector<double> uz;
    ArrayGeometry geom;
    SectorSpec sector;
    std::string name;

    int size() const { return static_cast<int>(beams.size()); }
    const CVector &operator[](int i) const { return beams.at(static_cast<std::size_t>(i)); }
    /// Beams as columns of an N_elements x size() matrix.
    CMatrix matrix() const;
};

/// Steered beams on a cell-centered grid that is uniform in sin(az) and in
/// cos(zen) over the sector. Index = zenith_row * n_az + azimuth_col.
Codebook build_steered_codebook(const ArrayGeometry &geom, const SectorSpec &sector, int n_az,
                                int n_zen);

/// Orthonormal 2-D DFT codebook (n_x * n_z beams) over the full visible region.
Codebook build_dft_codebook(const ArrayGeometry &geom);

enum class CodebookPreset { bs4, bs8, bs16, bs32, bs256, ue4, ue16 };

CodebookPreset parse_codebook_preset(std::string_view name);
std::string_view to_string(CodebookPreset preset);
Codebook codebook_preset(CodebookPreset preset);
inline Codebook codebook_preset(std::string_view name)
{
    return codebook_preset(parse_codebook_preset(name));
}

/// Base-station (16 x 4) and user (2 x 2) arrays used by the presets.
ArrayGeometry default_bs_geometry();
ArrayGeometry default_ue_geometry();

} // namespace mubeam
