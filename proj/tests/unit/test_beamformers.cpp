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

#include "irsdm/beamformers.hpp"
#include "irsdm/oracle.hpp"
#include "irsdm/property_suite.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace irsdm;

namespace
{
constexpr double pi = std::numbers::pi;

// Hand-built channels with Alice on a 2-element array and a 1-element IRS.
ChannelSet two_by_one(const ComplexVector &h_ab, const ComplexVector &h_ae, const ComplexMatrix &h_ai)
{
    ChannelSet ch;
    ch.h_ab = h_ab;
    ch.h_ae = h_ae;
    ch.h_ai = h_ai;
    ch.h_ib = ComplexVector::Ones(h_ai.rows());
    ch.h_ie = ComplexVector::Ones(h_ai.rows());
    ch.alice_to_irs = h_ai.row(0).adjoint();
    ch.irs_from_alice = ComplexVector::Ones(h_ai.rows());
    ch.g_ab = ch.g_ae = ch.g_ai = ch.g_ib = ch.g_ie = 1.0;
    ch.g_aib = ch.g_aie = 1.0;
    return ch;
}
} // namespace

TEST(AnBeamformer, ThreeAntennaHandExample)
{
    ComplexVector h_ab(3), h_ae(3);
    h_ab << 1, 0, 0;
    h_ae << 0, 0, 1;
    ComplexMatrix h_ai(1, 3);
    h_ai << 0, 1, 0;
    const ComplexVector v = an_beamformer(two_by_one(h_ab, h_ae, h_ai));
    EXPECT_NEAR(std::abs(v(2)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(v(0)) + std::abs(v(1)), 0.0, 1e-14);
}

TEST(AnBeamformer, NoDegreesOfFreedom)
{
    ComplexVector h_ab(2), h_ae(2);
    h_ab << 1, 0;
    h_ae << 1, 1;
    ComplexMatrix h_ai(1, 2);
    h_ai << 0, 1;
    try
    {
        an_beamformer(two_by_one(h_ab, h_ae, h_ai));
        FAIL() << "expected domain_error";
    }
    catch (const std::domain_error &e)
    {
        EXPECT_STREQ(e.what(), "no AN degrees of freedom");
    }
}

TEST(AnBeamformer, EveInsideConstraintSpan)
{
    ComplexVector h_ab(3), h_ae(3);
    h_ab << 1, 0, 0;
    h_ae << 1, 2, 0;
    ComplexMatrix h_ai(1, 3);
    h_ai << 0, 1, 0;
    try
    {
        an_beamformer(two_by_one(h_ab, h_ae, h_ai));
        FAIL() << "expected domain_error";
    }
    catch (const std::domain_error &e)
    {
        EXPECT_STREQ(e.what(), "AN cannot reach Eve");
    }
}

TEST(AnBeamformer, NullsBobAndIrsAndMaximizesEveGain)
{
    for (std::uint64_t s = 0; s < 10; ++s)
    {
        const ChannelSet ch = verify::random_channels(60 + s, 8, 16);
        const ComplexVector v = an_beamformer(ch);
        EXPECT_NEAR(v.norm(), 1.0, 1e-12);
        EXPECT_LE((an_constraints(ch) * v).cwiseAbs().maxCoeff(), 1e-10);

        // Gain toward Eve is the best any unit vector in the null space achieves.
        const ComplexMatrix basis = oracle::null_space_basis(an_constraints(ch));
        const double sampled = oracle::sample_max_gain_in_span(basis, ch.h_ae, 20000, 70 + s);
        const double achieved = std::abs(ch.h_ae.dot(v));
        EXPECT_GE(achieved, sampled - 1e-12);
        EXPECT_NEAR(achieved, (basis.adjoint() * ch.h_ae).norm(), 1e-10);
    }
}

TEST(AnBeamformer, ReferenceGeometryLargeIrs)
{
    // H_ai is rank one, so even N_s = 1024 leaves N_a - 2 AN dimensions.
    const ChannelSet ch = verify::reference_channels(16, 1024);
    const ComplexVector v = an_beamformer(ch);
    EXPECT_LE(std::abs(ch.h_ab.dot(v)), 1e-10);
    EXPECT_LE((ch.h_ai * v).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(MaxSrCm, MatchesSampledOptimum)
{
    const PowerBudget pw;
    for (std::uint64_t s = 0; s < 5; ++s)
    {
        const ChannelSet ch = verify::random_channels(120 + s, 4, 6);
        const ComplexVector an = an_beamformer(ch);
        const ComplexVector phases = random_phases(6, 130 + s);
        const ComplexVector cm = max_sr_cm(ch, phases, an, pw);
        EXPECT_NEAR(cm.norm(), 1.0, 1e-12);

        BeamformingSolution sol{cm, an, phases};
        const double achieved = (1.0 + sinr_bob(ch, sol, pw)) / (1.0 + sinr_eve(ch, sol, pw));
        const double sampled = oracle::sample_max_sr_ratio(ch, phases, an, pw, 20000, 140 + s);
        EXPECT_GE(achieved, sampled * (1.0 - 1e-9));
    }
}

TEST(MaxSrCm, PencilQuotientEqualsRateRatio)
{
    const PowerBudget pw;
    const ChannelSet ch = verify::random_channels(9, 5, 5);
    const ComplexVector an = an_beamformer(ch);
    const ComplexVector phases = random_phases(5, 10);
    const CmPencil pencil = max_sr_cm_pencil(ch, phases, an, pw);
    const ComplexVector v = verify::random_unit_vector(11, 5);
    BeamformingSolution sol{v, an, phases};
    const double ratio = (1.0 + sinr_bob(ch, sol, pw)) / (1.0 + sinr_eve(ch, sol, pw));
    const double q = rayleigh_quotient(pencil.numerator, pencil.denominator, v);
    const double scale = (pencil.an_leak_eve + pw.noise_eve) / (pencil.an_leak_bob + pw.noise_bob);
    EXPECT_NEAR(q * scale, ratio, 1e-9 * ratio);
}

TEST(SlnrPhase, ReducesToAlignmentWithoutEve)
{
    const PowerBudget pw;
    ChannelSet ch = verify::reference_channels(8, 24);
    ch.h_ie.setZero();
    const ComplexVector cm = mrt_cm(ch, MrtVariant::ai(), {8, 0.5});
    const ComplexVector slnr_theta = slnr_phase(ch, cm, pw);
    const ComplexVector pa_theta = pa_phase(ch, cm);
    // Equal up to one global phase.
    const Complex ratio = slnr_theta(0) / pa_theta(0);
    for (Eigen::Index m = 0; m < 24; ++m)
    {
        EXPECT_NEAR(std::abs(slnr_theta(m)), 1.0, 1e-12);
        EXPECT_NEAR(std::abs(slnr_theta(m) - ratio * pa_theta(m)), 0.0, 1e-9);
    }
}

TEST(SlnrPhase, CascadeIsCoPhasedWithDirectPath)
{
    const PowerBudget pw;
    const ChannelSet ch = verify::random_channels(17, 6, 12);
    const ComplexVector cm = verify::random_unit_vector(18, 6);
    const ComplexVector theta = slnr_phase(ch, cm, pw);
    const Complex direct = ch.h_ab.dot(cm);
    const Complex cascade = cascade_coefficients(ch, Receiver::bob, cm).dot(theta);
    EXPECT_NEAR(std::remainder(std::arg(direct) - std::arg(cascade), 2.0 * pi), 0.0, 1e-9);
}

TEST(SlnrDirection, IsDominantEigenvectorOfPencil)
{
    const PowerBudget pw;
    const ChannelSet ch = verify::random_channels(21, 5, 4);
    const ComplexVector cm = verify::random_unit_vector(22, 5);
    const SlnrPencil pencil = slnr_pencil(ch, cm, pw);
    const auto reference = dominant_gen_eigvec(pencil.numerator, pencil.denominator);
    const ComplexVector u = slnr_direction(ch, cm, pw);
    EXPECT_NEAR(std::abs(u.dot(reference.vector)), 1.0, 1e-8);
    EXPECT_NEAR(rayleigh_quotient(pencil.numerator, pencil.denominator, u), reference.quotient,
                1e-8 * reference.quotient);
}

TEST(PaPhase, MatchesGridOracleForSmallIrs)
{
    const PowerBudget pw;
    for (int ns : {1, 2})
    {
        const ChannelSet ch = verify::random_channels(300 + ns, 4, ns);
        const ComplexVector cm = verify::random_unit_vector(310 + ns, 4);
        const ComplexVector theta = pa_phase(ch, cm);
        const double achieved = cascaded_power_bob(ch, cm, theta, pw);
        const auto grid = oracle::grid_max_cascaded_power(ch, cm, pw, {360, ns});
        EXPECT_GE(achieved, grid.power * (1.0 - 1e-12));
        // A 1-degree grid can miss the optimum by at most cos(0.5 deg) per element in amplitude.
        EXPECT_LE(achieved, grid.power / std::pow(std::cos(pi / 360.0), 2) + 1e-30);
    }
}

TEST(PaPhase, UnitModulusAndDegenerateEntries)
{
    const ChannelSet ch = verify::reference_channels(4, 16);
    const ComplexVector cm = mrt_cm(ch, MrtVariant::ai(), {4, 0.5});
    const PhaseAlignment pa = pa_phase_detailed(ch, cm);
    EXPECT_EQ(pa.degenerate_elements, 0u);
    for (Eigen::Index m = 0; m < 16; ++m)
        EXPECT_NEAR(std::abs(pa.phases(m)), 1.0, 1e-12);

    ChannelSet dead = ch;
    dead.h_ib.setZero();
    const PhaseAlignment none = pa_phase_detailed(dead, cm);
    EXPECT_EQ(none.degenerate_elements, 16u);
    EXPECT_LE((none.phases - ComplexVector::Ones(16)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(PaPhase, BeatsRandomPhasesOnAverage)
{
    const PowerBudget pw;
    const ChannelSet ch = verify::reference_channels(8, 64);
    const ComplexVector cm = mrt_cm(ch, MrtVariant::ai(), {8, 0.5});
    const double aligned = cascaded_power_bob(ch, cm, pa_phase(ch, cm), pw);
    EXPECT_GE(aligned, oracle::mean_random_cascaded_power(ch, cm, pw, 1000, 3));
}

TEST(MrtCm, Variants)
{
    const ChannelSet ch = verify::reference_channels(8, 8);
    const SteeringConfig alice{8, 0.5};
    EXPECT_LE((mrt_cm(ch, MrtVariant::ai(), alice) - ch.alice_to_irs).norm(), 1e-12);
    EXPECT_LE((mrt_cm(ch, MrtVariant::ab(), alice) - ch.h_ab).norm(), 1e-12);
    const ComplexVector sum = mrt_cm(ch, MrtVariant::sum(), alice);
    EXPECT_NEAR(sum.norm(), 1.0, 1e-12);
    EXPECT_LE((sum - (ch.alice_to_irs + ch.h_ab).normalized()).norm(), 1e-12);
    EXPECT_LE((mrt_cm(ch, MrtVariant::at(pi / 2), alice) - ch.h_ab).norm(), 1e-12);
    EXPECT_THROW(mrt_cm(ch, MrtVariant::ai(), {4, 0.5}), std::invalid_argument);
}

TEST(MrtNspPa, ProducesValidSolution)
{
    const PowerBudget pw;
    const ChannelSet ch = verify::reference_channels(16, 64);
    const BeamformingSolution sol = mrt_nsp_pa(ch, pw, MrtVariant::ai(), {16, 0.5});
    EXPECT_NO_THROW(validate(sol, ch));
    EXPECT_GT(evaluate(ch, sol, pw).secrecy_rate, 0.0);
}

TEST(MaxSrSlnr, SingleIterationCap)
{
    const PowerBudget pw;
    const ChannelSet ch = verify::reference_channels(8, 16);
    MaxSrSlnrConfig cfg;
    cfg.max_iterations = 1;
    cfg.epsilon = 1e-300;
    cfg.seed = 4;
    const auto res = max_sr_slnr(ch, pw, cfg);
    EXPECT_EQ(res.trace.iterations, 1);
    EXPECT_EQ(res.trace.secrecy_rates.size(), 2u);
    EXPECT_TRUE(res.trace.hit_iteration_cap);
    EXPECT_FALSE(res.trace.converged);
    EXPECT_NO_THROW(validate(res.solution, ch));
}

TEST(MaxSrSlnr, KeepsBestIterateAndConverges)
{
    const PowerBudget pw;
    const ChannelSet ch = verify::reference_channels(16, 32);
    MaxSrSlnrConfig cfg;
    cfg.seed = 77;
    const auto res = max_sr_slnr(ch, pw, cfg);
    double best = 0.0;
    for (double r : res.trace.secrecy_rates)
        best = std::max(best, r);
    EXPECT_DOUBLE_EQ(res.secrecy_rate, best);
    EXPECT_NEAR(evaluate(ch, res.solution, pw).secrecy_rate, res.secrecy_rate, 1e-12);
    EXPECT_TRUE(res.trace.converged);
    EXPECT_LE(res.trace.iterations, cfg.max_iterations);
    // No worse than the closed-form method on the same scenario.
    const double closed = evaluate(ch, mrt_nsp_pa(ch, pw, MrtVariant::ai(), {16, 0.5}), pw).secrecy_rate;
    EXPECT_GE(res.secrecy_rate, closed - 1e-9);
}

TEST(MaxSrSlnr, DeterministicForFixedSeedAndUsesInitialPhases)
{
    const PowerBudget pw;
    const ChannelSet ch = verify::reference_channels(8, 16);
    MaxSrSlnrConfig cfg;
    cfg.seed = 5;
    const auto a = max_sr_slnr(ch, pw, cfg);
    const auto b = max_sr_slnr(ch, pw, cfg);
    EXPECT_EQ(a.trace.secrecy_rates, b.trace.secrecy_rates);

    cfg.initial_phases = ComplexVector::Ones(16);
    const auto c = max_sr_slnr(ch, pw, cfg);
    BeamformingSolution start{ch.alice_to_irs, an_beamformer(ch), ComplexVector::Ones(16)};
    EXPECT_DOUBLE_EQ(c.trace.secrecy_rates.front(), evaluate(ch, start, pw).secrecy_rate);

    cfg.initial_phases = ComplexVector::Ones(3);
    EXPECT_THROW(max_sr_slnr(ch, pw, cfg), std::invalid_argument);
}

TEST(MaxSrSlnr, RestartsConcatenateTraces)
{
    const PowerBudget pw;
    const ChannelSet ch = verify::reference_channels(8, 16);
    MaxSrSlnrConfig cfg;
    cfg.restarts = 3;
    cfg.seed = 8;
    const auto res = max_sr_slnr(ch, pw, cfg);
    EXPECT_EQ(res.trace.secrecy_rates.size(), static_cast<std::size_t>(res.trace.iterations + 3));
}

TEST(MaxSrSlnr, RejectsBadConfig)
{
    const ChannelSet ch = verify::reference_channels(8, 16);
    MaxSrSlnrConfig cfg;
    cfg.epsilon = 0.0;
    EXPECT_THROW(max_sr_slnr(ch, PowerBudget{}, cfg), std::invalid_argument);
    cfg = {};
    cfg.max_iterations = 0;
    EXPECT_THROW(max_sr_slnr(ch, PowerBudget{}, cfg), std::invalid_argument);
}

TEST(BenchmarkPhase, NoIrsAndRandom)
{
    EXPECT_LE(benchmark_phase(BenchmarkPhase::no_irs, 5, 1).cwiseAbs().maxCoeff(), 0.0);
    const ComplexVector r = benchmark_phase(BenchmarkPhase::random_phase, 50, 9);
    for (Eigen::Index m = 0; m < r.size(); ++m)
        EXPECT_NEAR(std::abs(r(m)), 1.0, 1e-12);
    EXPECT_EQ(r, random_phases(50, 9));
    EXPECT_NE(r, random_phases(50, 10));
}

TEST(Flops, ClosedFormValues)
{
    EXPECT_EQ(flops_mrt_nsp_pa(16, 100).total, 23574u);
    EXPECT_EQ(flops_mrt_nsp_pa(1, 1).total, 6u);
    // 1 + 7 + 8 - 2 - 2 + 2 + 4 = 18; 18 + 2 + 1 - 1 = 20.
    EXPECT_EQ(flops_max_sr_slnr(1, 1, 1, 1).total, 20u);
    EXPECT_EQ(flops_max_sr_slnr(2, 3, 4, 5).total,
              4u * (5u * (27 + 63 + 48 + 16 + 16 - 6 - 2) + 8 + 2 - 1));
    EXPECT_THROW(flops_mrt_nsp_pa(0, 4), std::invalid_argument);
    EXPECT_THROW(flops_max_sr_slnr(1, 1, 0, 1), std::invalid_argument);
}

TEST(Flops, IterativeCostGrowsFasterThanClosedForm)
{
    double prev = 0.0;
    for (std::uint64_t ns : {16u, 64u, 256u, 1024u})
    {
        const double ratio = static_cast<double>(flops_max_sr_slnr(16, ns, 3, 3).total) /
                             static_cast<double>(flops_mrt_nsp_pa(16, ns).total);
        EXPECT_GT(ratio, prev);
        prev = ratio;
    }
}
