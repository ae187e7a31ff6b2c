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
#include <vector>

#include "mubeam/types.hpp"

namespace mubeam {

/// (rho/K)|g^H H f_k|^2 / (1 + (rho/K) sum_{m != k} |g^H H f_m|^2), K = beams.size().
double sinr(const CMatrix &H_k, std::span<const CVector> beams, const CVector &g_k, double rho,
            int k);

/// log2(1 + SINR_k) for every scheduled user (bits/s/Hz).
std::vector<double> user_rates(std::span<const CMatrix> H, std::span<const CVector> beams,
                               std::span<const CVector> g, double rho);

double sum_rate(std::span<const CMatrix> H, std::span<const CVector> beams,
                std::span<const CVector> g, double rho);

} // namespace mubeam
