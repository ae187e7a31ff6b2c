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

#include <optional>
#include <vector>

#include "mubeam/types.hpp"

namespace mubeam {

/// Bit depth of a quantizer; std::nullopt means infinite precision (pass-through).
using Bits = std::optional<int>;
inline constexpr Bits kUnquantized = std::nullopt;

/// dB-scale SNR quantizer: 2^bits levels max_db - span_db * i / (2^bits - 1).
struct SnrQuantSpec {
    int bits = 2;
    double max_db = 30.0;
    double span_db = 24.0;

    std::vector<double> levels() const;
};

/// RF beam-weight quantizer. Amplitude levels sit on a dB grid relative to a
/// flat 1/sqrt(N_t) taper: step_db * (i + 1 - 2^(bits-1)).
struct BeamQuantSpec {
    Bits amp_bits = kUnquantized;
    Bits phase_bits = kUnquantized;
    double step_db = 1.0;

    std::vector<double> amplitude_levels_db() const;
    double zero_cutoff_db() const;
};

/// Bit depths for the five report columns (the beam index is always exact).
struct FeedbackQuantSpec {
    Bits snr_bits = kUnquantized;
    double snr_max_db = 30.0;
    double snr_span_db = 24.0;
    Bits est_phase_bits = kUnquantized;
    Bits corr_amp_bits = kUnquantized;
    Bits corr_phase_bits = kUnquantized;

    std::optional<SnrQuantSpec> snr_spec() const;
};

SnrQuantSpec snr_preset_b2(); // (2 bits, 30 dB, 24 dB)
SnrQuantSpec snr_preset_b4(); // (4 bits, 30 dB, 30 dB)
BeamQuantSpec beam_preset_b4(); // 4 amplitude bits, 1 dB steps
BeamQuantSpec beam_preset_b6(); // 6 amplitude bits, 0.25 dB steps

/// Default dB span for a given SNR bit depth: 24 dB at 2 bits, otherwise 30 dB.
double default_snr_span_db(int bits);

/// Uniform phase quantizer on [0, 2 pi); level 2 pi wraps to 0.
double quantize_phase(double theta, Bits bits);

/// round((2^B - 1) alpha) / (2^B - 1); keeps 0 and 1 exactly representable.
double quantize_amplitude(double alpha, Bits bits);

/// Caps at max_db, then picks the nearest level (ties to the higher level).
double quantize_snr_db(double x_db, const SnrQuantSpec &spec);

/// Per-entry amplitude floor-to-grid plus phase quantization. Never increases
/// the power of any entry, so the beam power cannot grow.
CVector quantize_beam(const CVector &f, const BeamQuantSpec &spec);

/// Circular distance between two angles, in [0, pi].
double circular_distance(double a, double b);

/// Reduces an angle to [0, 2 pi).
double wrap_two_pi(double theta);

} // namespace mubeam
