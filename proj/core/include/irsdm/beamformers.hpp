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

#ifndef IRSDM_BEAMFORMERS_HPP
#define IRSDM_BEAMFORMERS_HPP

#include "irsdm/metrics.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace irsdm
{

struct MaxSrSlnrConfig
{
    double epsilon = 1e-3; // bit/s/Hz
    int max_iterations = 100;
    int restarts = 1;            // independent random initial phases; best run kept
    std::uint64_t seed = 0;      // drives the random initial phases
    std::optional<ComplexVector> initial_phases; // overrides the seeded draw (first restart only)
};

void validate(const MaxSrSlnrConfig &cfg);

struct IterationTrace
{
    // R_s after each iterate; entry 0 of every run is the initial point.
    std::vector<double> secrecy_rates;
    int iterations = 0;             // alternation steps over all restarts
    bool converged = false;         // every run met |dR_s| <= epsilon
    bool hit_iteration_cap = false; // some run stopped at max_iterations
};

struct MaxSrSlnrResult
{
    BeamformingSolution solution; // best iterate seen
    double secrecy_rate = 0.0;
    IterationTrace trace;
};

struct MrtVariant
{
    enum class Target
    {
        toward_ai,
        toward_ab,
        toward_sum,
        toward_angle
    };
    Target target = Target::toward_ai;
    double angle = 0.0; // radians, toward_angle only

    static MrtVariant ai() { return {Target::toward_ai, 0.0}; }
    static MrtVariant ab() { return {Target::toward_ab, 0.0}; }
    static MrtVariant sum() { return {Target::toward_sum, 0.0}; }
    static MrtVariant at(double theta) { return {Target::toward_angle, theta}; }
};

enum class BenchmarkPhase
{
    no_irs,
    random_phase
};

struct FlopCount
{
    std::uint64_t total = 0;
};

/// AN beamformer: unit vector in the null space of h_ab^H and H_ai maximizing |h_ae^H v|.
///
/// v_AN = T h_ae / |T h_ae| with T the projector onto that null space. Throws
/// std::domain_error("no AN degrees of freedom") when the null space is trivial and
/// std::domain_error("AN cannot reach Eve") when T h_ae vanishes.
ComplexVector an_beamformer(const ChannelSet &ch);

// Constraint matrix P = [h_ab, H_ai^H]^H.
ComplexMatrix an_constraints(const ChannelSet &ch);

/// CM beamformer maximizing (1 + gamma_b) / (1 + gamma_e) for fixed theta and v_AN.
///
/// Dominant generalized eigenvector of ((a + sigma_b^2) I + h_b1 h_b1^H, (b + sigma_e^2) I + h_e1 h_e1^H),
/// with a, b the AN powers leaking to Bob and Eve.
ComplexVector max_sr_cm(const ChannelSet &ch, const ComplexVector &phases, const ComplexVector &an,
                        const PowerBudget &pw);

struct CmPencil
{
    ComplexMatrix numerator;
    ComplexMatrix denominator;
    double an_leak_bob = 0.0; // a
    double an_leak_eve = 0.0; // b
};

CmPencil max_sr_cm_pencil(const ChannelSet &ch, const ComplexVector &phases, const ComplexVector &an,
                          const PowerBudget &pw);

// Unprojected SLNR maximizer u = B^{-1} a (A = a a^H is rank one). Zero if the cascade is dead.
ComplexVector slnr_direction(const ChannelSet &ch, const ComplexVector &cm, const PowerBudget &pw);

/// IRS phases from the SLNR criterion: theta = exp(j arg u).
///
/// The SLNR is blind to a global phase of theta; it is fixed so Bob's cascaded term adds in
/// phase with his direct term.
ComplexVector slnr_phase(const ChannelSet &ch, const ComplexVector &cm, const PowerBudget &pw);

// Alternating Max-SR (CM) / SLNR (IRS) optimization with keep-best.
MaxSrSlnrResult max_sr_slnr(const ChannelSet &ch, const PowerBudget &pw, const MaxSrSlnrConfig &cfg);

ComplexVector mrt_cm(const ChannelSet &ch, const MrtVariant &variant, const SteeringConfig &alice);

struct PhaseAlignment
{
    ComplexVector phases;
    std::size_t degenerate_elements = 0; // zero cascade entries, phase set to 0
};

// Phase alignment maximizing the cascaded power at Bob.
PhaseAlignment pa_phase_detailed(const ChannelSet &ch, const ComplexVector &cm);
ComplexVector pa_phase(const ChannelSet &ch, const ComplexVector &cm);

// MRT CM + NSP AN + PA IRS phases, no iteration.
BeamformingSolution mrt_nsp_pa(const ChannelSet &ch, const PowerBudget &pw, const MrtVariant &variant,
                               const SteeringConfig &alice);

ComplexVector benchmark_phase(BenchmarkPhase kind, int irs_elements, std::uint64_t seed);

// i.i.d. uniform phases on [0, 2 pi) from a seeded generator.
ComplexVector random_phases(int irs_elements, std::uint64_t seed);

FlopCount flops_max_sr_slnr(std::uint64_t alice_elements, std::uint64_t irs_elements, std::uint64_t d1,
                            std::uint64_t d2);
FlopCount flops_mrt_nsp_pa(std::uint64_t alice_elements, std::uint64_t irs_elements);

} // namespace irsdm

#endif
