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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mubeam/bounds.hpp"
#include "mubeam/channel.hpp"
#include "mubeam/precoders.hpp"
#include "mubeam/quantizers.hpp"

namespace mubeam {

struct SimConfig {
    // Channel
    int L = 6;
    SectorSpec aod = default_aod_sector();
    SectorSpec aoa = default_aoa_sector();

    // Cell and scheduling
    int K_cell = 10;
    int K = 2;

    // Beam alignment and feedback
    std::string bs_codebook = "bs8";
    std::string ue_codebook = "ue16";
    std::vector<int> P{1, 2, 4};
    double rho_db = 10.0;
    bool noiseless_phase = false;
    FeedbackQuantSpec feedback;

    // Precoding
    std::vector<Scheme> schemes{Scheme::steer, Scheme::zf};
    std::optional<BeamQuantSpec> beam_quant;
    double ge_eta_factor = 1.0; // eta_{m,k} = factor * rho / K
    ScalarUbOptions scalar_ub;
    AltOptOptions alt_opt;

    // Run
    int trials = 1000;
    std::uint64_t master_seed = 1;
    int workers = 1;
    std::string output;

    double rho() const { return db_to_linear(rho_db); }
    int max_P() const;
    bool has(Scheme s) const;
    /// Throws ConfigError on inconsistent settings.
    void validate() const;
};

/// Parses the sectioned key = value format (TOML subset: numbers, quoted
/// strings, booleans, `inf`, flat arrays, `#` comments).
SimConfig parse_config(const std::string &text);
SimConfig load_config(const std::string &path);

/// Raw key/value pairs as "section.key" -> value text, for diagnostics and tools.
std::map<std::string, std::string> parse_key_values(const std::string &text);

} // namespace mubeam
