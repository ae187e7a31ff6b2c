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

#include <iosfwd>
#include <string>
#include <vector>

#include "mubeam/config.hpp"

namespace mubeam {

/// One scheme's outcome inside a trial.
struct SchemeResult {
    Scheme scheme = Scheme::steer;
    int P = 0; // feedback rank the scheme used; 0 when it does not use the reports
    bool quantized = false;
    double sum_rate = 0.0;
    std::vector<double> user_rates;
    std::vector<std::string> flags;
};

struct TrialRecord {
    int trial_id = 0;
    std::vector<SchemeResult> results;
    int redraws = 0; // channel redraws forced by the scheduler
    bool zf_fallback = false;
    int alt_opt_iters = 0;
    bool alt_opt_converged = false;
};

/// Runs one trial on its own stream trial_rng(master_seed, trial_id).
TrialRecord run_trial(const SimConfig &cfg, int trial_id);

/// Runs cfg.trials trials on `workers` threads (cfg.workers when workers <= 0).
/// The output is ordered by trial id and does not depend on the worker count.
std::vector<TrialRecord> run_trials(const SimConfig &cfg, int workers = 0);

/// Header: trial_id,scheme,P,N,M,rho_db,sum_rate,rate_u1,rate_u2,flags
void write_csv(std::ostream &out, const SimConfig &cfg, const std::vector<TrialRecord> &records);
std::string csv_header();

} // namespace mubeam
