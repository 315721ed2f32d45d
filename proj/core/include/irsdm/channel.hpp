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

#ifndef IRSDM_CHANNEL_HPP
#define IRSDM_CHANNEL_HPP

#include "irsdm/linalg.hpp"

#include <array>
#include <optional>

namespace irsdm
{

// Uniform linear array description.
struct SteeringConfig
{
    int element_count = 1;
    double spacing_over_wavelength = 0.5;
};

using Position = std::array<double, 3>; // meters

/**
 * Node placement and angles.
 *
 * Alice's departure angles are explicit. The IRS-side angles (arrival from Alice, departure
 * toward Bob and Eve) are derived from the positions, measured from `irs_axis`, unless an
 * explicit override is set.
 */
struct NetworkGeometry
{
    Position alice{0.0, 0.0, 0.0};
    Position irs{0.0, 39.9, 3.5};
    Position bob{0.0, 90.0, 0.0};
    Position eve{0.0, 96.6, 29.4};

    double theta_ai = 17.0 * 3.14159265358979323846 / 36.0;
    double theta_ab = 3.14159265358979323846 / 2.0;
    double theta_ae = 7.0 * 3.14159265358979323846 / 12.0;

    Position irs_axis{0.0, 0.0, 1.0};
    std::optional<double> theta_irs_arrival;
    std::optional<double> theta_ib;
    std::optional<double> theta_ie;
};

struct PathLossModel
{
    double reference_gain = 1e-2; // linear gain at 1 m
    double exponent = 2.0;
    // Scale each IRS hop by N_s (coherent aperture of the normalized IRS response).
    bool irs_aperture_gain = true;
};

/// Every channel of the network.
///
/// All vectors are unit-norm steering vectors; H_ai = h(theta_AI^r) h(theta_ai)^H has unit
/// Frobenius norm. Path loss sits entirely in the gain fields.
struct ChannelSet
{
    ComplexVector h_ab;  // Alice -> Bob, N_a
    ComplexVector h_ae;  // Alice -> Eve, N_a
    ComplexMatrix h_ai;  // Alice -> IRS, N_s x N_a
    ComplexVector h_ib;  // IRS -> Bob, N_s
    ComplexVector h_ie;  // IRS -> Eve, N_s

    ComplexVector alice_to_irs; // h(theta_ai), Alice-side factor of H_ai
    ComplexVector irs_from_alice; // h(theta_AI^r), IRS-side factor of H_ai

    double g_ab = 0.0;
    double g_ae = 0.0;
    double g_ai = 0.0;
    double g_ib = 0.0;
    double g_ie = 0.0;
    double g_aib = 0.0; // g_ai * g_ib
    double g_aie = 0.0; // g_ai * g_ie

    double theta_ai = 0.0;
    double theta_ab = 0.0;
    double theta_ae = 0.0;
    double theta_irs_arrival = 0.0;
    double theta_ib = 0.0;
    double theta_ie = 0.0;

    Eigen::Index alice_elements() const { return h_ab.size(); }
    Eigen::Index irs_elements() const { return h_ib.size(); }
};

void validate(const SteeringConfig &cfg);
void validate(const PathLossModel &model);
void validate(const NetworkGeometry &geom);

// Entry n (1-based): exp(-j 2 pi Phi_n) / sqrt(N), Phi_n = -(d/lambda)(n - (N+1)/2) cos(theta).
ComplexVector steering_vector(double theta, const SteeringConfig &cfg);

// g0 * distance^-alpha. Throws std::invalid_argument for distance <= 0.
double path_loss(double distance, const PathLossModel &model);

double distance(const Position &a, const Position &b);

// Angle in [0, pi] between `axis` and the direction from `from` to `to`.
double axis_angle(const Position &from, const Position &to, const Position &axis);

ChannelSet build_channels(const NetworkGeometry &geom, const SteeringConfig &alice,
                          const SteeringConfig &irs, const PathLossModel &model);

} // namespace irsdm

#endif
