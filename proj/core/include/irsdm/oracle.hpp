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

#ifndef IRSDM_ORACLE_HPP
#define IRSDM_ORACLE_HPP

// Brute-force verifiers. Nothing here calls into the core numerics: every quantity is re-derived
// with explicit scalar loops so the two routes stay independent.

#include "irsdm/metrics.hpp"

#include <cstdint>
#include <vector>

namespace irsdm::oracle
{

struct GridSpec
{
    int points_per_dimension = 360;
    int dimensions = 1;
};

inline constexpr double grid_guard = 1e8;

struct GridMaximum
{
    ComplexVector phases;
    double power = 0.0;
};

/// Exhaustive search of beta_1 P_t g_aib |h_ib^H Theta H_ai v|^2 over the phase grid
/// {2 pi k / points} per element. Requires dimensions == N_s <= 3 and points^dims <= 1e8.
GridMaximum grid_max_cascaded_power(const ChannelSet &ch, const ComplexVector &cm, const PowerBudget &pw,
                                    const GridSpec &grid);

// Largest x^H A x / x^H B x over `samples` seeded random unit vectors.
double sample_max_quotient(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t samples,
                           std::uint64_t seed);

// SINR from scalar loops over the received-signal expansion.
double scalar_sinr(const ChannelSet &ch, const BeamformingSolution &sol, const PowerBudget &pw, Receiver target);

// sqrt(share g_d) h_d^H v + sqrt(share g_c) sum_m conj(h_rx,m) theta_m sum_n H_ai(m,n) v_n
Complex scalar_amplitude(const ChannelSet &ch, Receiver target, const ComplexVector &phases,
                         const ComplexVector &v, double power_share);

// Orthonormal basis (columns) of the row space of P, by modified Gram-Schmidt.
ComplexMatrix row_space_basis(const ComplexMatrix &p, double tolerance = 1e-10);

// Orthonormal basis (columns) of the null space of P: Gram-Schmidt of the standard basis
// against the row space.
ComplexMatrix null_space_basis(const ComplexMatrix &p, double tolerance = 1e-10);

// max |h^H w| over `samples` seeded random unit vectors w drawn from span(basis).
double sample_max_gain_in_span(const ComplexMatrix &basis, const ComplexVector &h, std::size_t samples,
                               std::uint64_t seed);

// max (1 + gamma_b) / (1 + gamma_e) over `samples` random unit v_CM, everything else fixed.
double sample_max_sr_ratio(const ChannelSet &ch, const ComplexVector &phases, const ComplexVector &an,
                           const PowerBudget &pw, std::size_t samples, std::uint64_t seed);

// Mean random-phase cascaded power over `draws`, for the benchmark comparison.
double mean_random_cascaded_power(const ChannelSet &ch, const ComplexVector &cm, const PowerBudget &pw,
                                  std::size_t draws, std::uint64_t seed);

} // namespace irsdm::oracle

#endif
