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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mubeam/codebook.hpp"
#include "mubeam/feedback.hpp"
#include "mubeam/quantizers.hpp"

namespace mubeam {

enum class Scheme { steer, zf, ge, scalar_ub, alt_opt, mrt_mrc_zf };

std::string_view to_string(Scheme s);
Scheme parse_scheme(std::string_view name);

/// K transmit beams, one column of F_RF per scheduled user (F_Dig = I).
struct PrecoderSet {
    std::vector<CVector> beams;
    Scheme scheme = Scheme::steer;
    bool quantized = false;

    int K() const { return static_cast<int>(beams.size()); }
    /// sum_k f_k^H f_k; must not exceed K.
    double total_power() const;
};

/// Stacks K effective channel rows into the K x N_t matrix used by ZF/GE.
CMatrix stack_rows(std::span<const CRowVector> rows);

/// Unit-norm columns of R^H (R R^H)^{-1}: beam m is orthogonal to every row k != m.
/// Throws RankDeficient when sigma_min(R) <= 1e-10 sigma_max(R).
PrecoderSet zf_beams(const CMatrix &rows);

/// Beam k is the strongest training beam f_{n_1} of user k.
PrecoderSet steer_best(std::span<const BeamReport> reports, const Codebook &tx);

/// Weighted-leakage beam (I + sum_{m != k} eta(m, k) r_m^H r_m)^{-1} r_k^H, normalized.
CVector ge_beam(int k, const CMatrix &rows, const RMatrix &eta);

/// ge_beam for every user.
PrecoderSet ge_beams(const CMatrix &rows, const RMatrix &eta);

/// eta(m, k) = weight for m != k, 0 on the diagonal.
RMatrix uniform_eta(int K, double weight);

/// Passes every beam through the RF amplitude/phase quantizer.
PrecoderSet quantize_precoder(const PrecoderSet &p, const BeamQuantSpec &spec);

} // namespace mubeam
