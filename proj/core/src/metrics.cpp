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

#include "irsdm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irsdm
{

namespace
{
constexpr double unit_tolerance = 1e-10;

void require(bool ok, const char *msg)
{
    if (!ok)
        throw std::invalid_argument(msg);
}
} // namespace

double dbm_to_watts(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts)
{
    return 10.0 * std::log10(watts) + 30.0;
}

PowerBudget make_power_budget(double transmit_dbm, double noise_bob_dbm, double noise_eve_dbm,
                              double cm_fraction)
{
    PowerBudget pw;
    pw.transmit_power = dbm_to_watts(transmit_dbm);
    pw.noise_bob = dbm_to_watts(noise_bob_dbm);
    pw.noise_eve = dbm_to_watts(noise_eve_dbm);
    pw.cm_fraction = cm_fraction;
    pw.an_fraction = 1.0 - cm_fraction;
    validate(pw);
    return pw;
}

void validate(const PowerBudget &pw)
{
    require(pw.transmit_power > 0.0 && std::isfinite(pw.transmit_power), "power: P_t must be positive");
    require(pw.cm_fraction > 0.0 && pw.an_fraction > 0.0, "power: beta fractions must be positive");
    require(std::abs(pw.cm_fraction + pw.an_fraction - 1.0) <= 1e-12, "power: beta_1 + beta_2 must equal 1");
    require(pw.noise_bob > 0.0 && pw.noise_eve > 0.0, "power: noise powers must be positive");
}

void validate(const BeamformingSolution &sol, const ChannelSet &ch)
{
    require(sol.cm.size() == ch.alice_elements(), "solution: v_CM dimension mismatch");
    require(sol.an.size() == ch.alice_elements(), "solution: v_AN dimension mismatch");
    require(sol.phases.size() == ch.irs_elements(), "solution: theta dimension mismatch");
    require(std::abs(sol.cm.norm() - 1.0) <= unit_tolerance, "solution: v_CM must be unit norm");
    require(std::abs(sol.an.norm() - 1.0) <= unit_tolerance, "solution: v_AN must be unit norm");
    for (Eigen::Index m = 0; m < sol.phases.size(); ++m)
    {
        const double mag = std::abs(sol.phases(m));
        require(mag <= unit_tolerance || std::abs(mag - 1.0) <= unit_tolerance,
                "solution: theta entries must have modulus 0 or 1");
    }
}

ComplexVector effective_channel(const ComplexVector &direct, const ComplexVector &cascade_rx,
                                const ComplexVector &phases, const ComplexMatrix &h_ai, double g_direct,
                                double g_cascade, double power_share)
{
    require(h_ai.cols() == direct.size(), "effective_channel: H_ai columns must match the direct channel");
    require(h_ai.rows() == cascade_rx.size() && phases.size() == cascade_rx.size(),
            "effective_channel: IRS dimensions disagree");
    const ComplexVector reflected = phases.conjugate().cwiseProduct(cascade_rx); // Theta^H h_rx
    return std::sqrt(power_share * g_direct) * direct +
           std::sqrt(power_share * g_cascade) * (h_ai.adjoint() * reflected);
}

ComplexVector effective_channel(const ChannelSet &ch, Receiver rx, const ComplexVector &phases,
                                double power_share)
{
    if (rx == Receiver::bob)
        return effective_channel(ch.h_ab, ch.h_ib, phases, ch.h_ai, ch.g_ab, ch.g_aib, power_share);
    return effective_channel(ch.h_ae, ch.h_ie, phases, ch.h_ai, ch.g_ae, ch.g_aie, power_share);
}

ComplexVector cascade_coefficients(const ChannelSet &ch, Receiver rx, const ComplexVector &cm)
{
    require(cm.size() == ch.alice_elements(), "cascade_coefficients: v_CM dimension mismatch");
    const ComplexVector at_irs = ch.h_ai * cm;
    const ComplexVector &h_rx = rx == Receiver::bob ? ch.h_ib : ch.h_ie;
    return at_irs.conjugate().cwiseProduct(h_rx);
}

double sinr(const ChannelSet &ch, const BeamformingSolution &sol, const PowerBudget &pw, Receiver rx)
{
    require(sol.cm.size() == ch.alice_elements() && sol.an.size() == ch.alice_elements(),
            "sinr: beamformer dimension mismatch");
    const double noise = rx == Receiver::bob ? pw.noise_bob : pw.noise_eve;
    const ComplexVector h_cm = effective_channel(ch, rx, sol.phases, pw.cm_fraction * pw.transmit_power);
    const ComplexVector h_an = effective_channel(ch, rx, sol.phases, pw.an_fraction * pw.transmit_power);
    const double signal = std::norm(h_cm.dot(sol.cm));
    const double interference = std::norm(h_an.dot(sol.an));
    return signal / (interference + noise);
}

double sinr_bob(const ChannelSet &ch, const BeamformingSolution &sol, const PowerBudget &pw)
{
    return sinr(ch, sol, pw, Receiver::bob);
}

double sinr_eve(const ChannelSet &ch, const BeamformingSolution &sol, const PowerBudget &pw)
{
    return sinr(ch, sol, pw, Receiver::eve);
}

SrEvaluation secrecy_rate(double sinr_bob, double sinr_eve)
{
    if (!(sinr_bob >= 0.0) || !(sinr_eve >= 0.0))
        throw std::invalid_argument("secrecy_rate: SINR must be nonnegative");
    SrEvaluation out;
    out.sinr_bob = sinr_bob;
    out.sinr_eve = sinr_eve;
    out.rate_bob = std::log2(1.0 + sinr_bob);
    out.rate_eve = std::log2(1.0 + sinr_eve);
    out.secrecy_rate = std::max(0.0, out.rate_bob - out.rate_eve);
    return out;
}

SrEvaluation evaluate(const ChannelSet &ch, const BeamformingSolution &sol, const PowerBudget &pw)
{
    return secrecy_rate(sinr_bob(ch, sol, pw), sinr_eve(ch, sol, pw));
}

double cascaded_power_bob(const ChannelSet &ch, const ComplexVector &cm, const ComplexVector &phases,
                          const PowerBudget &pw)
{
    const ComplexVector w = cascade_coefficients(ch, Receiver::bob, cm);
    require(phases.size() == w.size(), "cascaded_power_bob: theta dimension mismatch");
    return pw.cm_fraction * pw.transmit_power * ch.g_aib * std::norm(w.dot(phases));
}

double slnr(const ChannelSet &ch, const ComplexVector &cm, const ComplexVector &phases, const PowerBudget &pw)
{
    const double bob = cascaded_power_bob(ch, cm, phases, pw);
    const ComplexVector w_eve = cascade_coefficients(ch, Receiver::eve, cm);
    const double leak = pw.cm_fraction * pw.transmit_power * ch.g_aie * std::norm(w_eve.dot(phases));
    return bob / (leak + pw.noise_eve);
}

SlnrPencil slnr_pencil(const ChannelSet &ch, const ComplexVector &cm, const PowerBudget &pw)
{
    const ComplexVector w_bob = cascade_coefficients(ch, Receiver::bob, cm);
    const ComplexVector w_eve = cascade_coefficients(ch, Receiver::eve, cm);
    const double scale = pw.cm_fraction * pw.transmit_power;
    const Eigen::Index n = w_bob.size();

    SlnrPencil pencil;
    pencil.numerator = (scale * ch.g_aib) * (w_bob * w_bob.adjoint());
    pencil.denominator = (scale * ch.g_aie) * (w_eve * w_eve.adjoint());
    pencil.denominator.diagonal().array() += pw.noise_eve / static_cast<double>(n);
    return pencil;
}

} // namespace irsdm
