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

#include "mubeam/channel.hpp"
#include "mubeam/codebook.hpp"

namespace mubeam {

/// M x N table of |g_m^H H f_n|^2 (receive beam rows, transmit beam columns).
using SnrTable = RMatrix;

struct BeamPair {
    int m = 0; // receive (user) codebook index
    int n = 0; // transmit (base-station) codebook index
    double snr = 0.0;

    bool operator==(const BeamPair &) const = default;
};

/// Beam pairs in non-increasing SNR order with distinct transmit indices.
using TopPairs = std::vector<BeamPair>;

SnrTable sweep_snr(const CMatrix &H, const Codebook &tx, const Codebook &rx);
inline SnrTable sweep_snr(const ChannelRealization &ch, const Codebook &tx, const Codebook &rx)
{
    return sweep_snr(ch.H, tx, rx);
}

/// Greedy top-P: repeatedly take the strongest pair whose transmit index is
/// still unused. Ties go to the smaller m, then the smaller n.
TopPairs top_pairs(const SnrTable &table, int P);

/// Phase of sqrt(rho) g^H H f + n with a unit pilot and n ~ CN(0,1); the noise
/// term is dropped when `noiseless` is set.
double estimate_pair_phase(const CMatrix &H, const CVector &f, const CVector &g, double rho,
                           Rng &rng, bool noiseless);

} // namespace mubeam
