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

#include "mubeam/codebook.hpp"

#include <cmath>

namespace mubeam {

namespace {

CVector plane_wave(const ArrayGeometry &geom, double ux, double uz)
{
    const double amp = 1.0 / std::sqrt(static_cast<double>(geom.size()));
    CVector v(geom.size());
    for (int q = 0; q < geom.n_z; ++q)
        for (int p = 0; p < geom.n_x; ++p)
            v(q * geom.n_x + p) = std::polar(amp, kPi * (p * ux + q * uz));
    return v;
}

double cell_center(double lo, double hi, int i, int n) { return lo + (hi - lo) * (i + 0.5) / n; }

} // namespace

CMatrix Codebook::matrix() const
{
    CMatrix m(geom.size(), size());
    for (int i = 0; i < size(); ++i)
        m.col(i) = beams[static_cast<std::size_t>(i)];
    return m;
}

Codebook build_steered_codebook(const ArrayGeometry &geom, const SectorSpec &sector, int n_az,
                                int n_zen)
{
    if (n_az < 1 || n_zen < 1)
        throw OutOfRange("build_steered_codebook: grid sizes must be >= 1");
    sector.validate();

    const double s_lo = std::sin(sector.az_min), s_hi = std::sin(sector.az_max);
    const double c_lo = std::cos(sector.zen_max), c_hi = std::cos(sector.zen_min);

    Codebook cb;
    cb.geom = geom;
    cb.sector = sector;
    for (int iz = 0; iz < n_zen; ++iz) {
        const double zen = std::acos(cell_center(c_lo, c_hi, iz, n_zen));
        for (int ia = 0; ia < n_az; ++ia) {
            const double az = std::asin(cell_center(s_lo, s_hi, ia, n_az));
            cb.beams.push_back(steering_vector(geom, az, zen));
            cb.ux.push_back(std::sin(zen) * std::sin(az));
            cb.uz.push_back(std::cos(zen));
        }
    }
    return cb;
}

Codebook build_dft_codebook(const ArrayGeometry &geom)
{
    Codebook cb;
    cb.geom = geom;
    cb.sector = {-kPi / 2, kPi / 2, 0.0, kPi};
    cb.name = "dft";
    for (int j = 0; j < geom.n_z; ++j) {
        const double uz = -1.0 + (2.0 * j + 1.0) / geom.n_z;
        for (int i = 0; i < geom.n_x; ++i) {
            const double ux = -1.0 + (2.0 * i + 1.0) / geom.n_x;
            cb.beams.push_back(plane_wave(geom, ux, uz));
            cb.ux.push_back(ux);
            cb.uz.push_back(uz);
        }
    }
    return cb;
}

ArrayGeometry default_bs_geometry() { return {16, 4}; }
ArrayGeometry default_ue_geometry() { return {2, 2}; }

CodebookPreset parse_codebook_preset(std::string_view name)
{
    for (auto p : {CodebookPreset::bs4, CodebookPreset::bs8, CodebookPreset::bs16,
                   CodebookPreset::bs32, CodebookPreset::bs256, CodebookPreset::ue4,
                   CodebookPreset::ue16})
        if (to_string(p) == name)
            return p;
    throw UnknownPreset("unknown codebook preset '" + std::string(name) + "'");
}

std::string_view to_string(CodebookPreset preset)
{
    switch (preset) {
    case CodebookPreset::bs4: return "bs4";
    case CodebookPreset::bs8: return "bs8";
    case CodebookPreset::bs16: return "bs16";
    case CodebookPreset::bs32: return "bs32";
    case CodebookPreset::bs256: return "bs256";
    case CodebookPreset::ue4: return "ue4";
    case CodebookPreset::ue16: return "ue16";
    }
    throw UnknownPreset("unknown codebook preset");
}

Codebook codebook_preset(CodebookPreset preset)
{
    struct Grid {
        int n_az, n_zen;
        bool bs;
    };
    Grid g{};
    switch (preset) {
    case CodebookPreset::bs4: g = {4, 1, true}; break;
    case CodebookPreset::bs8: g = {8, 1, true}; break;
    case CodebookPreset::bs16: g = {8, 2, true}; break;
    case CodebookPreset::bs32: g = {8, 4, true}; break;
    case CodebookPreset::bs256: g = {32, 8, true}; break;
    case CodebookPreset::ue4: g = {2, 2, false}; break;
    case CodebookPreset::ue16: g = {4, 4, false}; break;
    }
    Codebook cb = g.bs ? build_steered_codebook(default_bs_geometry(), default_aod_sector(), g.n_az, g.n_zen)
                       : build_steered_codebook(default_ue_geometry(), default_aoa_sector(), g.n_az, g.n_zen);
    cb.name = std::string(to_string(preset));
    return cb;
}

} // namespace mubeam
