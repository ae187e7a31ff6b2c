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
#include <utility>

#include "mubeam/feedback.hpp"

namespace mubeam {

/// Directional-avoidance pairing: the first user is uniform over the cell, the
/// second is uniform over users whose best transmit beam differs from the
/// first user's. Throws NoEligibleUser when every user reports the same beam.
std::pair<int, int> schedule_pair(std::span<const BeamReport> reports, Rng &rng);

} // namespace mubeam
