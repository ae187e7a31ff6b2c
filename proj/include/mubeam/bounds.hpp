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

#include "mubeam/codebook.hpp"
#include "mubeam/precoders.hpp"

namespace mubeam {

/// Search over f_k = sum_n delta_{n,k} f_tr,n / |...| for the true-channel sum
/// rate with the receive beams held fixed. The search runs as projected
/// gradient ascent on the unit sphere of an orthonormal basis of span(F_tr).
struct ScalarUbOptions {
    int restarts = 4;        // random initializations on top of the structured ones
    int max_iters = 300;     // ascent iterations per initialization
    double step_init = 1.0;  // initial step along the Riemannian gradient
    double grad_eps = 1e-9;  // stop when the projected gradient norm falls below this
    double tol = 1e-10;      // stop when an accepted step gains less than this (bits)
};

struct ScalarUbResult {
    std::vector<Eigen::VectorXcd> delta; // per-user minimum-norm codebook weights
    PrecoderSet beams;
    double sum_rate = 0.0;
};

/// `init_sets` are beam sets already inside span(F_tr) (typically the ZF beams);
/// each one is used as a starting point and as a floor on the returned rate.
ScalarUbResult scalar_ub(std::span<const CMatrix> H, std::span<const CVector> g,
                         const Codebook &tx, double rho, const ScalarUbOptions &opts,
                         std::span<const std::vector<CVector>> init_sets, Rng &rng);

namespace detail {

/// Sum rate of unit beams u_m against reduced channels h_k (rate term uses h_k^H u_m).
double reduced_sum_rate(const std::vector<CVector> &h, const std::vector<CVector> &u, double rho);

/// Sphere-projected conjugate gradient of reduced_sum_rate with respect to each u_m.
std::vector<CVector> reduced_sum_rate_gradient(const std::vector<CVector> &h,
                                               const std::vector<CVector> &u, double rho);

} // namespace detail

/// Alternating SLNR (transmit) / SINR (receive) optimization on the true channels.
struct AltOptOptions {
    int n_stop = 10;
    /// Candidate leakage weights, in units of rho/K, applied to every interferer.
    std::vector<double> eta_grid{0.0, 0.1, 1.0, 10.0, 100.0};
    double tol = 1e-3; // |R_i - R_{i-1}| threshold in bits
};

struct AltOptResult {
    std::vector<CVector> beams;
    std::vector<CVector> rx_beams;
    double sum_rate = 0.0;
    int n_iters = 0;
    bool converged = false;
    std::vector<double> history; // sum rate after every iteration
};

AltOptResult alternating_opt(std::span<const CMatrix> H, double rho, const AltOptOptions &opts,
                             Rng &rng);

/// Generalized-Rayleigh transmit step for one user at fixed receive beams and uniform weight.
CVector slnr_beam(std::span<const CMatrix> H, std::span<const CVector> g, int k, double eta);

/// Generalized-Rayleigh receive step for one user at fixed transmit beams.
CVector sinr_rx_beam(const CMatrix &H_k, std::span<const CVector> beams, int k, double rho);

struct MrtMrcZfResult {
    PrecoderSet beams;
    std::vector<CVector> rx_beams;
};

/// Fully-digital baseline: principal left singular vectors as receive beams,
/// then ZF on the exact effective rows g_k^H H_k.
MrtMrcZfResult mrt_mrc_zf(std::span<const CMatrix> H, double rho);

} // namespace mubeam
