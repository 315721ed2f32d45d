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

#include "irsdm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace irsdm::oracle
{

namespace
{
ComplexVector random_unit(Eigen::Index n, std::mt19937_64 &rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector x(n);
    double norm2 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
    {
        x(i) = Complex(gauss(rng), gauss(rng));
        norm2 += std::norm(x(i));
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Eigen::Index i = 0; i < n; ++i)
        x(i) *= inv;
    return x;
}

// x^H M x by explicit double loop
Complex quadratic(const ComplexMatrix &m, const ComplexVector &x)
{
    Complex acc(0.0, 0.0);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        for (Eigen::Index j = 0; j < x.size(); ++j)
            acc += std::conj(x(i)) * m(i, j) * x(j);
    return acc;
}

Complex inner(const ComplexVector &a, const ComplexVector &b)
{
    Complex acc(0.0, 0.0);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        acc += std::conj(a(i)) * b(i);
    return acc;
}

double cascaded_power(const ChannelSet &ch, const ComplexVector &cm, const ComplexVector &phases,
                      const PowerBudget &pw)
{
    Complex amp(0.0, 0.0);
    for (Eigen::Index m = 0; m < ch.h_ai.rows(); ++m)
    {
        Complex at_element(0.0, 0.0);
        for (Eigen::Index n = 0; n < ch.h_ai.cols(); ++n)
            at_element += ch.h_ai(m, n) * cm(n);
        amp += std::conj(ch.h_ib(m)) * phases(m) * at_element;
    }
    return pw.cm_fraction * pw.transmit_power * ch.g_aib * std::norm(amp);
}

// Append `candidate` to `basis` after orthogonalization, if it survives the tolerance.
bool gram_schmidt_step(std::vector<ComplexVector> &basis, ComplexVector candidate, double tolerance)
{
    const double original = std::sqrt(inner(candidate, candidate).real());
    if (original == 0.0)
        return false;
    for (int pass = 0; pass < 2; ++pass) // re-orthogonalize once
        for (const auto &q : basis)
            candidate -= q * inner(q, candidate);
    const double remaining = std::sqrt(inner(candidate, candidate).real());
    if (remaining <= tolerance * original)
        return false;
    basis.push_back(candidate / remaining);
    return true;
}

ComplexMatrix to_matrix(const std::vector<ComplexVector> &cols, Eigen::Index rows)
{
    ComplexMatrix out(rows, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
        out.col(static_cast<Eigen::Index>(k)) = cols[k];
    return out;
}
} // namespace

GridMaximum grid_max_cascaded_power(const ChannelSet &ch, const ComplexVector &cm, const PowerBudget &pw,
                                    const GridSpec &grid)
{
    if (grid.points_per_dimension < 1 || grid.dimensions < 1)
        throw std::invalid_argument("grid: points and dimensions must be positive");
    if (std::pow(static_cast<double>(grid.points_per_dimension), grid.dimensions) > grid_guard)
        throw std::invalid_argument("grid: more than 1e8 points");
    if (grid.dimensions != ch.irs_elements() || grid.dimensions > 3)
        throw std::invalid_argument("grid: dimensions must equal N_s and be at most 3");

    const int dims = grid.dimensions;
    const int pts = grid.points_per_dimension;
    std::vector<int> index(static_cast<std::size_t>(dims), 0);
    ComplexVector phases(dims);

    GridMaximum best;
    best.power = -1.0;
    while (true)
    {
        for (int d = 0; d < dims; ++d)
            phases(d) = std::polar(1.0, 2.0 * std::numbers::pi * index[d] / pts);
        const double power = cascaded_power(ch, cm, phases, pw);
        if (power > best.power)
        {
            best.power = power;
            best.phases = phases;
        }
        int d = 0;
        while (d < dims && ++index[d] == pts)
            index[d++] = 0;
        if (d == dims)
            break;
    }
    return best;
}

double sample_max_quotient(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t samples,
                           std::uint64_t seed)
{
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("sample_max_quotient: dimension mismatch");
    if (samples < 1)
        throw std::invalid_argument("sample_max_quotient: need at least one sample");

    std::mt19937_64 rng(seed);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < samples; ++s)
    {
        const ComplexVector x = random_unit(a.rows(), rng);
        const double q = quadratic(a, x).real() / quadratic(b, x).real();
        best = std::max(best, q);
    }
    return best;
}

Complex scalar_amplitude(const ChannelSet &ch, Receiver target, const ComplexVector &phases,
                         const ComplexVector &v, double power_share)
{
    const bool bob = target == Receiver::bob;
    const ComplexVector &direct = bob ? ch.h_ab : ch.h_ae;
    const ComplexVector &rx = bob ? ch.h_ib : ch.h_ie;
    const double g_direct = bob ? ch.g_ab : ch.g_ae;
    const double g_cascade = bob ? ch.g_aib : ch.g_aie;

    Complex direct_sum(0.0, 0.0);
    for (Eigen::Index n = 0; n < v.size(); ++n)
        direct_sum += std::conj(direct(n)) * v(n);

    Complex cascade_sum(0.0, 0.0);
    for (Eigen::Index m = 0; m < rx.size(); ++m)
    {
        Complex at_element(0.0, 0.0);
        for (Eigen::Index n = 0; n < v.size(); ++n)
            at_element += ch.h_ai(m, n) * v(n);
        cascade_sum += std::conj(rx(m)) * phases(m) * at_element;
    }
    return std::sqrt(power_share * g_direct) * direct_sum + std::sqrt(power_share * g_cascade) * cascade_sum;
}

double scalar_sinr(const ChannelSet &ch, const BeamformingSolution &sol, const PowerBudget &pw, Receiver target)
{
    const double noise = target == Receiver::bob ? pw.noise_bob : pw.noise_eve;
    const Complex s = scalar_amplitude(ch, target, sol.phases, sol.cm, pw.cm_fraction * pw.transmit_power);
    const Complex z = scalar_amplitude(ch, target, sol.phases, sol.an, pw.an_fraction * pw.transmit_power);
    return std::norm(s) / (std::norm(z) + noise);
}

ComplexMatrix row_space_basis(const ComplexMatrix &p, double tolerance)
{
    std::vector<ComplexVector> basis;
    for (Eigen::Index r = 0; r < p.rows(); ++r)
        gram_schmidt_step(basis, p.row(r).adjoint(), tolerance);
    return to_matrix(basis, p.cols());
}

ComplexMatrix null_space_basis(const ComplexMatrix &p, double tolerance)
{
    std::vector<ComplexVector> basis;
    for (Eigen::Index r = 0; r < p.rows(); ++r)
        gram_schmidt_step(basis, p.row(r).adjoint(), tolerance);
    const std::size_t row_rank = basis.size();
    for (Eigen::Index k = 0; k < p.cols(); ++k)
    {
        ComplexVector e = ComplexVector::Zero(p.cols());
        e(k) = 1.0;
        gram_schmidt_step(basis, e, 1e-8);
    }
    std::vector<ComplexVector> complement(basis.begin() + static_cast<std::ptrdiff_t>(row_rank), basis.end());
    return to_matrix(complement, p.cols());
}

double sample_max_gain_in_span(const ComplexMatrix &basis, const ComplexVector &h, std::size_t samples,
                               std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    double best = 0.0;
    for (std::size_t s = 0; s < samples; ++s)
    {
        const ComplexVector coeffs = random_unit(basis.cols(), rng);
        ComplexVector w = ComplexVector::Zero(basis.rows());
        for (Eigen::Index k = 0; k < basis.cols(); ++k)
            w += coeffs(k) * basis.col(k);
        best = std::max(best, std::abs(inner(h, w)));
    }
    return best;
}

double sample_max_sr_ratio(const ChannelSet &ch, const ComplexVector &phases, const ComplexVector &an,
                           const PowerBudget &pw, std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    BeamformingSolution sol;
    sol.an = an;
    sol.phases = phases;
    double best = 0.0;
    for (std::size_t s = 0; s < samples; ++s)
    {
        sol.cm = random_unit(an.size(), rng);
        const double ratio =
            (1.0 + scalar_sinr(ch, sol, pw, Receiver::bob)) / (1.0 + scalar_sinr(ch, sol, pw, Receiver::eve));
        best = std::max(best, ratio);
    }
    return best;
}

double mean_random_cascaded_power(const ChannelSet &ch, const ComplexVector &cm, const PowerBudget &pw,
                                  std::size_t draws, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double total = 0.0;
    ComplexVector phases(ch.irs_elements());
    for (std::size_t s = 0; s < draws; ++s)
    {
        for (Eigen::Index m = 0; m < phases.size(); ++m)
            phases(m) = std::polar(1.0, angle(rng));
        total += cascaded_power(ch, cm, phases, pw);
    }
    return total / static_cast<double>(draws);
}

} // namespace irsdm::oracle
