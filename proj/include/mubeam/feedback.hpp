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

#include <json.hpp>

#include "mubeam/alignment.hpp"
#include "mubeam/quantizers.hpp"

namespace mubeam {

/// One row of the P x 5 report.
struct ReportRow {
    int n_idx = 0;               // base-station codebook index
    double gamma = 0.0;          // sqrt of the (quantized) linear SNR
    double rel_phase = 0.0;      // phi_l - phi_1
    double mu = 0.0;             // quantized |beta_l|
    double rel_corr_phase = 0.0; // nu_l - nu_1
};

struct BeamReport {
    std::vector<ReportRow> rows;
    int g_rx = 0; // receive beam used for multi-user reception (m_1)
    int P() const { return static_cast<int>(rows.size()); }
};

/// Runs the sweep, picks the top-P pairs and quantizes the five report fields.
/// The multi-user receive beam is the best training beam g_{m_1}.
BeamReport build_report(const CMatrix &H, const Codebook &tx, const Codebook &rx, int P,
                        double rho, const FeedbackQuantSpec &fq, Rng &rng,
                        bool noiseless_phase = false);

/// First P rows of a report built at a larger P.
BeamReport truncated(const BeamReport &report, int P);

/// g^H H_hat = sum_l mu_l gamma_l exp(j(dphi_l + dnu_l)) f_{n_l}^H.
CRowVector reconstruct_row(const BeamReport &report, const Codebook &tx);

/// P (log2 N + B_snr + B_corr_amp) + (P - 1)(B_est_phase + B_corr_phase).
int feedback_bits(int P, int N, const FeedbackQuantSpec &fq);

/// B_snr = 2, B_corr_amp = P and B_est_phase + B_corr_phase = P.
FeedbackQuantSpec heuristic_feedback_spec(int P);

nlohmann::json to_json(const BeamReport &report);
BeamReport report_from_json(const nlohmann::json &j);

} // namespace mubeam
