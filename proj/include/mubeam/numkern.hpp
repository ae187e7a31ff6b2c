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

// Small dense Hermitian kernels: PD solves, inverse square roots, dominant
// eigenvectors and the generalized Rayleigh-quotient maximizer
//
//     f_opt = argmax_{|f| = 1} (f^H A f) / (f^H B f)
//           = B^{-1/2} DomEig(B^{-1/2} A B^{-1/2}) / |...|,
//
// which for A = w w^H collapses to B^{-1} w / |B^{-1} w|.
//
// Everything is templated on the real scalar and takes Eigen expressions.

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "mubeam/types.hpp"

namespace mubeam::numkern {

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived> &m, const char *what)
{
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DimensionMismatch(std::string(what) + ": matrix must be square and non-empty");
}

template <typename Derived>
auto max_abs(const Eigen::MatrixBase<Derived> &m)
{
    return m.cwiseAbs().maxCoeff();
}

/// Checks entrywise Hermitian symmetry to 1e-10 relative, then returns (B + B^H) / 2.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
hermitian_part(const Eigen::MatrixBase<Derived> &b, const char *what)
{
    require_square(b, what);
    using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Mat bm = b;
    const auto scale = max_abs(bm);
    const auto asym = max_abs(bm - bm.adjoint());
    if (!(asym <= 1e-10 * scale))
        throw SingularMatrix(std::string(what) + ": matrix is not Hermitian");
    return (bm + bm.adjoint()) / 2;
}

} // namespace detail

/// Solves B x = w for Hermitian positive definite B (Cholesky).
template <typename DerivedB, typename DerivedW>
Eigen::Matrix<typename DerivedB::Scalar, Eigen::Dynamic, 1>
herm_solve(const Eigen::MatrixBase<DerivedB> &b, const Eigen::MatrixBase<DerivedW> &w)
{
    if (b.rows() != w.size())
        throw DimensionMismatch("herm_solve: dimension mismatch");
    const auto bh = detail::hermitian_part(b, "herm_solve");
    Eigen::LLT<std::decay_t<decltype(bh)>> llt(bh);
    if (llt.info() != Eigen::Success)
        throw SingularMatrix("herm_solve: matrix is not positive definite");
    return llt.solve(w.eval());
}

/// B^{-1/2} via the Hermitian eigendecomposition; result is Hermitian PD.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
principal_sqrt_inv(const Eigen::MatrixBase<Derived> &b)
{
    using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Mat bh = detail::hermitian_part(b, "principal_sqrt_inv");
    if (Eigen::LLT<Mat>(bh).info() != Eigen::Success)
        throw SingularMatrix("principal_sqrt_inv: matrix is not positive definite");
    Eigen::SelfAdjointEigenSolver<Mat> es(bh);
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0)
        throw SingularMatrix("principal_sqrt_inv: matrix is not positive definite");
    const auto inv_sqrt = es.eigenvalues().array().rsqrt().matrix();
    const Mat s = es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
    return (s + s.adjoint()) / 2;
}

/// Unit-norm dominant eigenvector of a Hermitian PSD matrix by power iteration.
///
/// Starts from the normalized all-ones vector (falling back to canonical basis
/// vectors if that start is annihilated) and stops once the Rayleigh residual
/// |A v - theta v| drops to tol * theta.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1>
dominant_eigvec(const Eigen::MatrixBase<Derived> &a,
                typename Derived::RealScalar tol = 1e-11, int max_iter = 200000)
{
    using Scalar = typename Derived::Scalar;
    using Real = typename Derived::RealScalar;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    const Mat ah = detail::hermitian_part(a, "dominant_eigvec");
    const Eigen::Index n = ah.rows();
    const Real scale = ah.norm();
    if (!(scale > 0) || !std::isfinite(scale))
        throw NoConvergence("dominant_eigvec: matrix is zero or non-finite");

    for (Eigen::Index start = -1; start < n; ++start) {
        Vec v = (start < 0) ? Vec(Vec::Ones(n)) : Vec(Vec::Unit(n, start));
        v.normalize();
        Vec av = ah * v;
        if (av.norm() <= std::numeric_limits<Real>::epsilon() * scale)
            continue;
        for (int it = 0; it < max_iter; ++it) {
            const Real theta = std::real(v.dot(av));
            const Real resid = (av - theta * v).norm();
            if (theta > 0 && resid <= tol * theta)
                return v;
            v = av / av.norm();
            av = ah * v;
        }
        throw NoConvergence("dominant_eigvec: iteration budget exhausted");
    }
    throw NoConvergence("dominant_eigvec: every start vector was annihilated");
}

/// Closed-form maximizer for the rank-1 numerator A = w w^H.
template <typename DerivedW, typename DerivedB>
Eigen::Matrix<typename DerivedB::Scalar, Eigen::Dynamic, 1>
generalized_dominant_eigvec_rank1(const Eigen::MatrixBase<DerivedW> &w,
                                  const Eigen::MatrixBase<DerivedB> &b)
{
    auto x = herm_solve(b, w);
    const auto nrm = x.norm();
    if (!(nrm > 0))
        throw SingularMatrix("generalized_dominant_eigvec_rank1: zero numerator vector");
    return x / nrm;
}

/// General path: B^{-1/2} DomEig(B^{-1/2} A B^{-1/2}), normalized.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, 1>
generalized_dominant_eigvec(const Eigen::MatrixBase<DerivedA> &a,
                            const Eigen::MatrixBase<DerivedB> &b)
{
    using Mat = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("generalized_dominant_eigvec: dimension mismatch");
    const Mat s = principal_sqrt_inv(b);
    Mat c = s * detail::hermitian_part(a, "generalized_dominant_eigvec") * s;
    c = (c + c.adjoint()).eval() / 2;
    auto f = (s * dominant_eigvec(c)).eval();
    return f / f.norm();
}

template <typename DerivedA, typename DerivedV>
typename DerivedA::RealScalar rayleigh_quotient(const Eigen::MatrixBase<DerivedA> &a,
                                                const Eigen::MatrixBase<DerivedV> &v)
{
    return std::real(v.dot(a * v)) / v.squaredNorm();
}

template <typename DerivedA, typename DerivedB, typename DerivedV>
typename DerivedA::RealScalar generalized_rayleigh_quotient(const Eigen::MatrixBase<DerivedA> &a,
                                                            const Eigen::MatrixBase<DerivedB> &b,
                                                            const Eigen::MatrixBase<DerivedV> &v)
{
    return std::real(v.dot(a * v)) / std::real(v.dot(b * v));
}

} // namespace mubeam::numkern
