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
#include "irsdm/oracle.hpp"
#include "irsdm/property_suite.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace irsdm;

namespace
{
BeamformingSolution random_solution(std::uint64_t seed, const ChannelSet &ch)
{
    BeamformingSolution sol;
    sol.cm = verify::random_unit_vector(seed, static_cast<int>(ch.alice_elements()));
    sol.an = verify::random_unit_vector(seed + 1, static_cast<int>(ch.alice_elements()));
    sol.phases = verify::random_unit_vector(seed + 2, static_cast<int>(ch.irs_elements()));
    for (Eigen::Index m = 0; m < sol.phases.size(); ++m)
        sol.phases(m) /= std::abs(sol.phases(m));
    return sol;
}
} // namespace

TEST(Power, DbmConversions)
{
    EXPECT_DOUBLE_EQ(dbm_to_watts(30.0), 1.0);
    EXPECT_NEAR(dbm_to_watts(-40.0), 1e-7, 1e-22);
    EXPECT_NEAR(watts_to_dbm(dbm_to_watts(12.5)), 12.5, 1e-12);
    const PowerBudget pw = make_power_budget(30.0, -40.0, -40.0, 0.8);
    EXPECT_NEAR(pw.an_fraction, 0.2, 1e-15);
    EXPECT_THROW(make_power_budget(30.0, -40.0, -40.0, 1.0), std::invalid_argument);
    PowerBudget bad;
    bad.an_fraction = 0.3;
    EXPECT_THROW(validate(bad), std::invalid_argument);
}

TEST(SecrecyRate, HandValues)
{
    EXPECT_DOUBLE_EQ(secrecy_rate(3.0, 1.0).secrecy_rate, 1.0);
    EXPECT_DOUBLE_EQ(secrecy_rate(1.0, 3.0).secrecy_rate, 0.0);
    EXPECT_DOUBLE_EQ(secrecy_rate(0.0, 0.0).secrecy_rate, 0.0);
    EXPECT_DOUBLE_EQ(secrecy_rate(7.0, 0.0).rate_bob, 3.0);
    EXPECT_THROW(secrecy_rate(-1.0, 0.0), std::invalid_argument);
}

TEST(SecrecyRate, MonotoneInBobAndEve)
{
    double prev = -1.0;
    for (double s = 0.0; s < 50.0; s += 0.5)
    {
        const double r = secrecy_rate(s, 2.0).secrecy_rate;
        EXPECT_GE(r, prev);
        prev = r;
    }
    prev = 1e9;
    for (double s = 0.0; s < 50.0; s += 0.5)
    {
        const double r = secrecy_rate(20.0, s).secrecy_rate;
        EXPECT_LE(r, prev);
        prev = r;
    }
}

TEST(EffectiveChannel, ZeroPhasesGiveDirectPath)
{
    const ChannelSet ch = verify::reference_channels(8, 16);
    const ComplexVector h = effective_channel(ch, Receiver::bob, ComplexVector::Zero(16), 2.0);
    EXPECT_LE((h - std::sqrt(2.0 * ch.g_ab) * ch.h_ab).cwiseAbs().maxCoeff(), 1e-18);
}

TEST(EffectiveChannel, MatchesScalarOracle)
{
    for (std::uint64_t s = 0; s < 20; ++s)
    {
        const ChannelSet ch = verify::random_channels(500 + s, 4 + static_cast<int>(s % 5), 3 + static_cast<int>(s % 11));
        const BeamformingSolution sol = random_solution(900 + 3 * s, ch);
        for (Receiver rx : {Receiver::bob, Receiver::eve})
        {
            const Complex fast = effective_channel(ch, rx, sol.phases, 0.7).dot(sol.cm);
            const Complex slow = oracle::scalar_amplitude(ch, rx, sol.phases, sol.cm, 0.7);
            EXPECT_NEAR(std::abs(fast - slow), 0.0, 1e-9 * std::max(1e-30, std::abs(slow)));
        }
    }
}

TEST(Sinr, MatchesScalarOracleRelative)
{
    const PowerBudget pw;
    for (std::uint64_t s = 0; s < 30; ++s)
    {
        const ChannelSet ch = verify::random_channels(700 + s, 6, 10);
        const BeamformingSolution sol = random_solution(1000 + 3 * s, ch);
        for (Receiver rx : {Receiver::bob, Receiver::eve})
        {
            const double fast = sinr(ch, sol, pw, rx);
            const double slow = oracle::scalar_sinr(ch, sol, pw, rx);
            EXPECT_LE(std::abs(fast - slow), 1e-9 * slow);
        }
    }
}

TEST(Sinr, SingleAntennaNoIrsClosedForm)
{
    ChannelSet ch = verify::reference_channels(1, 1);
    BeamformingSolution sol{ComplexVector::Ones(1), ComplexVector::Ones(1), ComplexVector::Zero(1)};
    PowerBudget pw;
    const double expected = pw.cm_fraction * pw.transmit_power * ch.g_ab /
                            (pw.an_fraction * pw.transmit_power * ch.g_ab + pw.noise_bob);
    EXPECT_NEAR(sinr_bob(ch, sol, pw), expected, 1e-12 * expected);
}

TEST(Slnr, QuotientOfPencil)
{
    const PowerBudget pw;
    for (std::uint64_t s = 0; s < 10; ++s)
    {
        const ChannelSet ch = verify::random_channels(40 + s, 5, 7);
        const BeamformingSolution sol = random_solution(80 + 3 * s, ch);
        const SlnrPencil pencil = slnr_pencil(ch, sol.cm, pw);
        const double q = rayleigh_quotient(pencil.numerator, pencil.denominator, sol.phases);
        // theta^H B theta includes sigma_e^2 / N_s * N_s = sigma_e^2 for unit-modulus theta.
        EXPECT_NEAR(q, slnr(ch, sol.cm, sol.phases, pw), 1e-9 * q);
    }
}

TEST(Slnr, SwappingReceiversSwapsRoles)
{
    // If Bob and Eve trade cascaded channels, the pencils trade their rank-one parts.
    const PowerBudget pw;
    ChannelSet ch = verify::random_channels(3, 4, 6);
    ChannelSet swapped = ch;
    std::swap(swapped.h_ib, swapped.h_ie);
    std::swap(swapped.g_aib, swapped.g_aie);
    const ComplexVector cm = verify::random_unit_vector(4, 4);
    const SlnrPencil a = slnr_pencil(ch, cm, pw);
    const SlnrPencil b = slnr_pencil(swapped, cm, pw);
    ComplexMatrix ridge = ComplexMatrix::Identity(6, 6) * (pw.noise_eve / 6.0);
    EXPECT_LE((a.numerator - (b.denominator - ridge)).cwiseAbs().maxCoeff(), 1e-12 * (a.numerator.norm() + pw.noise_eve));
    EXPECT_LE((b.numerator - (a.denominator - ridge)).cwiseAbs().maxCoeff(), 1e-12 * (b.numerator.norm() + pw.noise_eve));
}

TEST(CascadedPower, GrowsWithAlignment)
{
    const PowerBudget pw;
    const ChannelSet ch = verify::reference_channels(8, 32);
    const ComplexVector cm = ch.alice_to_irs;
    const ComplexVector w = cascade_coefficients(ch, Receiver::bob, cm);
    ComplexVector aligned(w.size());
    for (Eigen::Index m = 0; m < w.size(); ++m)
        aligned(m) = w(m) / std::abs(w(m));
    const double best = cascaded_power_bob(ch, cm, aligned, pw);
    const double sum_abs = w.cwiseAbs().sum();
    EXPECT_NEAR(best, pw.cm_fraction * pw.transmit_power * ch.g_aib * sum_abs * sum_abs, 1e-9 * best);
    EXPECT_GE(best, oracle::mean_random_cascaded_power(ch, cm, pw, 2000, 5));
}

TEST(SolutionValidation, RejectsWrongShapesAndNorms)
{
    const ChannelSet ch = verify::reference_channels(4, 4);
    BeamformingSolution sol = random_solution(1, ch);
    EXPECT_NO_THROW(validate(sol, ch));
    BeamformingSolution scaled = sol;
    scaled.cm *= 2.0;
    EXPECT_THROW(validate(scaled, ch), std::invalid_argument);
    BeamformingSolution partial = sol;
    partial.phases(0) *= 0.5;
    EXPECT_THROW(validate(partial, ch), std::invalid_argument);
    BeamformingSolution off = sol;
    off.phases(1) = 0.0;
    EXPECT_NO_THROW(validate(off, ch));
}
