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

#ifndef IRSDM_METRICS_HPP
#define IRSDM_METRICS_HPP

#include "irsdm/channel.hpp"

namespace irsdm
{

// Linear units throughout (watts).
struct PowerBudget
{
    double transmit_power = 1.0; // P_t
    double cm_fraction = 0.8;    // beta_1
    double an_fraction = 0.2;    // beta_2
    double noise_bob = 1e-7;     // sigma_b^2
    double noise_eve = 1e-7;     // sigma_e^2
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

// beta_2 = 1 - beta_1.
PowerBudget make_power_budget(double transmit_dbm, double noise_bob_dbm, double noise_eve_dbm,
                              double cm_fraction);

void validate(const PowerBudget &pw);

/// CM and AN transmit beamformers plus the IRS reflection vector.
///
/// `phases` holds the diagonal of Theta, i.e. phases(m) = e^{j phi_m}. The all-zero vector
/// switches the IRS off.
struct BeamformingSolution
{
    ComplexVector cm;
    ComplexVector an;
    ComplexVector phases;
};

struct SrEvaluation
{
    double sinr_bob = 0.0;
    double sinr_eve = 0.0;
    double rate_bob = 0.0;
    double rate_eve = 0.0;
    double secrecy_rate = 0.0;
};

enum class Receiver
{
    bob,
    eve
};

// Throws std::invalid_argument on shape or norm violations (1e-10).
void validate(const BeamformingSolution &sol, const ChannelSet &ch);

/// Composite channel h such that h^H v equals the received amplitude for beamformer v:
///   h = sqrt(share g_direct) direct + sqrt(share g_cascade) H_ai^H diag(theta)^H cascade_rx
ComplexVector effective_channel(const ComplexVector &direct, const ComplexVector &cascade_rx,
                                const ComplexVector &phases, const ComplexMatrix &h_ai, double g_direct,
                                double g_cascade, double power_share);

ComplexVector effective_channel(const ChannelSet &ch, Receiver rx, const ComplexVector &phases,
                                double power_share);

// w with (cascaded amplitude at rx) = w^H theta, i.e. w = diag(H_ai v)^H h_rx. No gain weights.
ComplexVector cascade_coefficients(const ChannelSet &ch, Receiver rx, const ComplexVector &cm);

double sinr_bob(const ChannelSet &ch, const BeamformingSolution &sol, const PowerBudget &pw);
double sinr_eve(const ChannelSet &ch, const BeamformingSolution &sol, const PowerBudget &pw);
double sinr(const ChannelSet &ch, const BeamformingSolution &sol, const PowerBudget &pw, Receiver rx);

// R_s = max(0, log2(1 + gamma_b) - log2(1 + gamma_e)). Negative SINR throws.
SrEvaluation secrecy_rate(double sinr_bob, double sinr_eve);

SrEvaluation evaluate(const ChannelSet &ch, const BeamformingSolution &sol, const PowerBudget &pw);

// beta_1 P_t g_aib |h_ib^H Theta H_ai v|^2
double cascaded_power_bob(const ChannelSet &ch, const ComplexVector &cm, const ComplexVector &phases,
                          const PowerBudget &pw);

/// Signal-to-leakage-noise ratio of the IRS reflection:
///   beta_1 P_t g_aib |h_ib^H Theta H_ai v|^2 / (beta_1 P_t g_aie |h_ie^H Theta H_ai v|^2 + sigma_e^2)
double slnr(const ChannelSet &ch, const ComplexVector &cm, const ComplexVector &phases, const PowerBudget &pw);

struct SlnrPencil
{
    ComplexMatrix numerator;   // A
    ComplexMatrix denominator; // B, includes (sigma_e^2 / N_s) I
};

// theta^H A theta / theta^H B theta equals slnr() for every unit-modulus theta.
SlnrPencil slnr_pencil(const ChannelSet &ch, const ComplexVector &cm, const PowerBudget &pw);

} // namespace irsdm

#endif
