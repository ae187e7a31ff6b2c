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

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace mubeam {

/// Linear-interpolation percentile at position q/100 * (n - 1) of the sorted data.
double percentile(std::span<const double> data, double q);

struct CsvRow {
    int trial_id = 0;
    std::string scheme;
    int P = 0;
    int N = 0;
    int M = 0;
    double rho_db = 0.0;
    double sum_rate = 0.0;
    std::vector<double> user_rates;
    std::vector<std::string> flags;
    bool quantized() const;
};

std::vector<CsvRow> read_csv(std::istream &in);
std::vector<CsvRow> read_csv_file(const std::string &path);

struct GroupSummary {
    std::string scheme;
    int P = 0;
    bool quantized = false;
    int count = 0;
    double mean = 0.0;
    std::array<double, 5> pct{}; // 5, 25, 50, 75, 95
};

/// Groups rows by (scheme, P, quantized) in first-appearance order.
std::vector<GroupSummary> summarize(std::span<const CsvRow> rows);

void print_summary(std::ostream &out, std::span<const GroupSummary> groups);
nlohmann::json summary_json(std::span<const GroupSummary> groups);

} // namespace mubeam
