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

#include "mubeam/scheduler.hpp"

#include <vector>

namespace mubeam {

std::pair<int, int> schedule_pair(std::span<const BeamReport> reports, Rng &rng)
{
    if (reports.size() < 2)
        throw NoEligibleUser("schedule_pair: need at least two users");
    const auto best = [&](std::size_t u) { return reports[u].rows.at(0).n_idx; };

    std::uniform_int_distribution<std::size_t> pick_first(0, reports.size() - 1);
    const std::size_t i = pick_first(rng);

    std::vector<std::size_t> eligible;
    for (std::size_t u = 0; u < reports.size(); ++u)
        if (u != i && best(u) != best(i))
            eligible.push_back(u);
    if (eligible.empty())
        throw NoEligibleUser("schedule_pair: every user shares the same best transmit beam");

    std::uniform_int_distribution<std::size_t> pick_second(0, eligible.size() - 1);
    const std::size_t j = eligible[pick_second(rng)];
    return {static_cast<int>(i), static_cast<int>(j)};
}

} // namespace mubeam
