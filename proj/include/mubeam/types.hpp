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

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mubeam {

template <typename Real>
using CMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using CRowVectorT = Eigen::Matrix<std::complex<Real>, 1, Eigen::Dynamic>;

using cd = std::complex<double>;
using CMatrix = CMatrixT<double>;
using CVector = CVectorT<double>;
using CRowVector = CRowVectorT<double>;
using RMatrix = Eigen::MatrixXd;

/// Per-trial random stream. Seeded explicitly; never shared between workers.
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;

// Error hierarchy. Every library failure derives from mubeam::Error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define MUBEAM_DEFINE_ERROR(Name)                                 \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string &what) : Error(what) {}   \
    }

MUBEAM_DEFINE_ERROR(SingularMatrix);
MUBEAM_DEFINE_ERROR(NoConvergence);
MUBEAM_DEFINE_ERROR(DimensionMismatch);
MUBEAM_DEFINE_ERROR(OutOfRange);
MUBEAM_DEFINE_ERROR(UnknownPreset);
MUBEAM_DEFINE_ERROR(BadIndex);
MUBEAM_DEFINE_ERROR(RankDeficient);
MUBEAM_DEFINE_ERROR(NoEligibleUser);
MUBEAM_DEFINE_ERROR(EmptyInput);
MUBEAM_DEFINE_ERROR(ConfigError);

#undef MUBEAM_DEFINE_ERROR

/// Draws one CN(0, 1) sample.
inline cd complex_normal(Rng &rng)
{
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    const double re = nd(rng);
    const double im = nd(rng);
    return {re, im};
}

/// Per-trial stream: master_seed + trial_index, scrambled with splitmix64.
inline Rng trial_rng(std::uint64_t master_seed, std::uint64_t trial_index)
{
    std::uint64_t z = master_seed + trial_index + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    return Rng(z);
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

} // namespace mubeam
