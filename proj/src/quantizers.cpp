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

#include "mubeam/quantizers.hpp"

#include <algorithm>
#include <cmath>

namespace mubeam {

namespace {

// Slack for "strictly below" comparisons on the dB amplitude grid, so that a
// flat taper sitting at 0 dB up to rounding lands on the same level.
constexpr double kGridSlackDb = 1e-9;

int checked_bits(int b, const char *what)
{
    if (b < 1 || b > 30)
        throw OutOfRange(std::string(what) + ": bit depth must lie in [1, 30]");
    return b;
}

} // namespace

std::vector<double> SnrQuantSpec::levels() const
{
    checked_bits(bits, "SnrQuantSpec");
    if (!(span_db > 0))
        throw OutOfRange("SnrQuantSpec: span must be positive");
    const int n = 1 << bits;
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = max_db - span_db * i / (n - 1);
    return out;
}

std::vector<double> BeamQuantSpec::amplitude_levels_db() const
{
    if (!amp_bits)
        return {};
    const int b = checked_bits(*amp_bits, "BeamQuantSpec");
    if (!(step_db > 0))
        throw OutOfRange("BeamQuantSpec: step must be positive");
    const int n = 1 << b;
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = step_db * (i + 1 - (n / 2));
    return out;
}

double BeamQuantSpec::zero_cutoff_db() const
{
    const int b = checked_bits(amp_bits.value_or(1), "BeamQuantSpec");
    return -step_db * ((1 << (b - 1)) - 1);
}

std::optional<SnrQuantSpec> FeedbackQuantSpec::snr_spec() const
{
    if (!snr_bits)
        return std::nullopt;
    return SnrQuantSpec{*snr_bits, snr_max_db, snr_span_db};
}

SnrQuantSpec snr_preset_b2() { return {2, 30.0, 24.0}; }
SnrQuantSpec snr_preset_b4() { return {4, 30.0, 30.0}; }
BeamQuantSpec beam_preset_b4() { return {4, 6, 1.0}; }
BeamQuantSpec beam_preset_b6() { return {6, 6, 0.25}; }

double default_snr_span_db(int bits) { return bits <= 2 ? 24.0 : 30.0; }

double wrap_two_pi(double theta)
{
    double r = std::fmod(theta, 2.0 * kPi);
    if (r < 0)
        r += 2.0 * kPi;
    if (r >= 2.0 * kPi)
        r = 0.0;
    return r;
}

double circular_distance(double a, double b)
{
    const double d = wrap_two_pi(a - b);
    return std::min(d, 2.0 * kPi - d);
}

double quantize_phase(double theta, Bits bits)
{
    if (!bits)
        return theta;
    const int n = 1 << checked_bits(*bits, "quantize_phase");
    const double step = 2.0 * kPi / n;
    const long level = std::lround(wrap_two_pi(theta) / step) % n;
    return step * static_cast<double>(level);
}

double quantize_amplitude(double alpha, Bits bits)
{
    constexpr double slack = 1e-12;
    if (!(alpha >= -slack && alpha <= 1.0 + slack))
        throw OutOfRange("quantize_amplitude: input outside [0, 1]");
    alpha = std::clamp(alpha, 0.0, 1.0);
    if (!bits)
        return alpha;
    const double n = static_cast<double>((1 << checked_bits(*bits, "quantize_amplitude")) - 1);
    return std::round(n * alpha) / n;
}

double quantize_snr_db(double x_db, const SnrQuantSpec &spec)
{
    const auto lv = spec.levels();
    const double x = std::min(x_db, spec.max_db);
    if (std::isinf(x))
        return lv.back();
    // Levels are descending, so the first minimizer is the higher of a tie.
    double best = lv.front();
    double best_dist = std::abs(x - best);
    for (double l : lv) {
        const double d = std::abs(x - l);
        if (d < best_dist) {
            best = l;
            best_dist = d;
        }
    }
    return best;
}

CVector quantize_beam(const CVector &f, const BeamQuantSpec &spec)
{
    if (f.squaredNorm() > 1.0 + 1e-12)
        throw OutOfRange("quantize_beam: beam power exceeds one");
    const double nt = static_cast<double>(f.size());
    const auto levels = spec.amplitude_levels_db();
    const double cutoff = spec.amp_bits ? spec.zero_cutoff_db() : 0.0;

    CVector out(f.size());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        double amp = std::abs(f(i));
        if (spec.amp_bits) {
            const double x_db = 10.0 * std::log10(nt * amp * amp);
            if (!(x_db >= cutoff)) {
                amp = 0.0;
            } else {
                double chosen = levels.front();
                for (double l : levels)
                    if (l < x_db - kGridSlackDb)
                        chosen = l;
                amp = std::pow(10.0, chosen / 20.0) / std::sqrt(nt);
            }
        }
        const double phase = quantize_phase(std::arg(f(i)), spec.phase_bits);
        out(i) = std::polar(amp, phase);
    }
    return out;
}

} // namespace mubeam
