// SPDX-License-Identifier: Apache-2.0
//
// irsdm - secrecy-rate beamforming for IRS-aided directional modulation
// Copyright (C) 2026 The irsdm authors
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

#ifndef IRSDM_LINALG_HPP
#define IRSDM_LINALG_HPP

#include <Eigen/Dense>

#include <complex>

namespace irsdm
{

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

// Relative eigenvalue cutoff for the Hermitian pseudo-inverse.
inline constexpr double pinv_cutoff = 1e-12;

// Moore-Penrose pseudo-inverse of a Hermitian PSD matrix via its eigendecomposition.
// Eigenvalues below pinv_cutoff * (largest eigenvalue) are treated as zero.
ComplexMatrix hermitian_pseudo_inverse(const ComplexMatrix &gram);

// Orthogonal projector onto the null space of the rows of `constraints` (r x n):
//   T = I - P^H (P P^H)^+ P
// Rank-deficient P is fine; P = 0 yields the identity.
ComplexMatrix null_space_projector(const ComplexMatrix &constraints);

// x^H A x / x^H B x
double rayleigh_quotient(const ComplexMatrix &a, const ComplexMatrix &b, const ComplexVector &x);

struct GeneralizedEigenpair
{
    ComplexVector vector; // unit norm, largest-magnitude entry real nonnegative
    double quotient = 0.0;
};

/// Dominant generalized eigenvector of the Hermitian pencil (A, B), B positive definite.
///
/// Maximizes x^H A x / x^H B x over nonzero x. Solved as the standard Hermitian problem on
/// L^{-1} A L^{-H} with B = L L^H, then mapped back. Throws std::domain_error
/// ("indefinite denominator") if B is not positive definite, std::invalid_argument on shape or
/// symmetry violations.
GeneralizedEigenpair dominant_gen_eigvec(const ComplexMatrix &a, const ComplexMatrix &b);

// Rotate `x` by a global phase so its largest-magnitude entry is real and nonnegative.
void canonicalize_phase(ComplexVector &x);

// max |M - M^H| entry, relative to max |M| entry (0 for the zero matrix).
double hermitian_defect(const ComplexMatrix &m);

} // namespace irsdm

#endif
