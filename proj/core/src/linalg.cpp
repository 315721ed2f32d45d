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

#include "irsdm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace irsdm
{

namespace
{
constexpr double hermitian_tolerance = 1e-10;

void require_square(const ComplexMatrix &m, const char *what)
{
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument(std::string(what) + " must be a non-empty square matrix");
}
} // namespace

double hermitian_defect(const ComplexMatrix &m)
{
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0)
        return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

ComplexMatrix hermitian_pseudo_inverse(const ComplexMatrix &gram)
{
    require_square(gram, "gram");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(gram);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("hermitian_pseudo_inverse: eigensolver failed");

    const Eigen::VectorXd &values = eig.eigenvalues();
    const double largest = values.cwiseAbs().maxCoeff();
    const double cutoff = pinv_cutoff * largest;

    Eigen::VectorXd inverted = Eigen::VectorXd::Zero(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (largest > 0.0 && values(i) > cutoff)
            inverted(i) = 1.0 / values(i);

    const ComplexMatrix &vectors = eig.eigenvectors();
    return vectors * inverted.cast<Complex>().asDiagonal() * vectors.adjoint();
}

ComplexMatrix null_space_projector(const ComplexMatrix &constraints)
{
    if (constraints.rows() == 0 || constraints.cols() == 0)
        throw std::invalid_argument("null_space_projector: constraint matrix must be non-empty");

    const Eigen::Index n = constraints.cols();
    ComplexMatrix t = ComplexMatrix::Identity(n, n);
    if (constraints.rows() <= n)
    {
        const ComplexMatrix gram = constraints * constraints.adjoint();
        t -= constraints.adjoint() * hermitian_pseudo_inverse(gram) * constraints;
    }
    else
    {
        // Tall P: P^H (P P^H)^+ P = (P^H P)^+ (P^H P), which keeps the eigensolve n x n.
        const ComplexMatrix gram = constraints.adjoint() * constraints;
        t -= hermitian_pseudo_inverse(gram) * gram;
    }
    // Remove round-off asymmetry so T = T^H holds to machine precision.
    return 0.5 * (t + t.adjoint());
}

double rayleigh_quotient(const ComplexMatrix &a, const ComplexMatrix &b, const ComplexVector &x)
{
    const double num = x.dot(a * x).real();
    const double den = x.dot(b * x).real();
    return num / den;
}

void canonicalize_phase(ComplexVector &x)
{
    if (x.size() == 0)
        return;
    Eigen::Index idx = 0;
    x.cwiseAbs().maxCoeff(&idx);
    const double mag = std::abs(x(idx));
    if (mag == 0.0)
        return;
    x *= std::conj(x(idx)) / mag;
    x(idx) = Complex(std::abs(x(idx)), 0.0);
}

GeneralizedEigenpair dominant_gen_eigvec(const ComplexMatrix &a, const ComplexMatrix &b)
{
    require_square(a, "A");
    require_square(b, "B");
    if (a.rows() != b.rows())
        throw std::invalid_argument("dominant_gen_eigvec: A and B dimensions differ");
    if (hermitian_defect(a) > hermitian_tolerance)
        throw std::invalid_argument("dominant_gen_eigvec: A is not Hermitian");
    if (hermitian_defect(b) > hermitian_tolerance)
        throw std::invalid_argument("dominant_gen_eigvec: B is not Hermitian");

    const ComplexMatrix b_sym = 0.5 * (b + b.adjoint());
    const ComplexMatrix a_sym = 0.5 * (a + a.adjoint());

    // Smallest eigenvalue check first: LLT alone accepts some nearly singular matrices.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> b_eig(b_sym, Eigen::EigenvaluesOnly);
    const double b_min = b_eig.eigenvalues().minCoeff();
    const double b_max = b_eig.eigenvalues().cwiseAbs().maxCoeff();
    if (!(b_min > 0.0) || b_min <= 1e-14 * b_max)
        throw std::domain_error("indefinite denominator");

    Eigen::LLT<ComplexMatrix> llt(b_sym);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("indefinite denominator");

    // C = L^{-1} A L^{-H}
    const auto lower = llt.matrixL();
    ComplexMatrix c = lower.solve(a_sym);
    c = lower.solve(c.adjoint().eval()).adjoint();
    c = 0.5 * (c + c.adjoint());

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> c_eig(c);
    if (c_eig.info() != Eigen::Success)
        throw std::runtime_error("dominant_gen_eigvec: eigensolver failed");

    const Eigen::Index top = c.rows() - 1; // eigenvalues ascend
    ComplexVector y = c_eig.eigenvectors().col(top);
    ComplexVector x = llt.matrixU().solve(y); // x = L^{-H} y
    x.normalize();
    canonicalize_phase(x);

    return {x, rayleigh_quotient(a_sym, b_sym, x)};
}

} // namespace irsdm
