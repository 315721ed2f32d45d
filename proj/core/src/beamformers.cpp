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

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace irsdm
{

namespace
{
// Relative size below which T h_ae counts as zero.
constexpr double reach_tolerance = 1e-10;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Complex unit_phase_of(const Complex &z)
{
    const double mag = std::abs(z);
    return mag > 0.0 ? z / mag : Complex(1.0, 0.0);
}

ComplexVector normalized(const ComplexVector &v, const char *what)
{
    const double n = v.norm();
    if (!(n > 1e-12))
        throw std::domain_error(std::string(what) + ": zero-norm direction");
    return v / n;
}
} // namespace

void validate(const MaxSrSlnrConfig &cfg)
{
    if (!(cfg.epsilon > 0.0))
        throw std::invalid_argument("max_sr_slnr: epsilon must be positive");
    if (cfg.max_iterations < 1)
        throw std::invalid_argument("max_sr_slnr: max_iterations must be >= 1");
    if (cfg.restarts < 1)
        throw std::invalid_argument("max_sr_slnr: restarts must be >= 1");
}

ComplexMatrix an_constraints(const ChannelSet &ch)
{
    const Eigen::Index n_irs = ch.irs_elements();
    ComplexMatrix p(1 + n_irs, ch.alice_elements());
    p.row(0) = ch.h_ab.adjoint();
    p.bottomRows(n_irs) = ch.h_ai;
    return p;
}

ComplexVector an_beamformer(const ChannelSet &ch)
{
    const ComplexMatrix t = null_space_projector(an_constraints(ch));
    // trace(T) = dimension of the null space
    if (t.trace().real() < 0.5)
        throw std::domain_error("no AN degrees of freedom");

    const ComplexVector projected = t * ch.h_ae;
    if (projected.norm() <= reach_tolerance * ch.h_ae.norm())
        throw std::domain_error("AN cannot reach Eve");
    return projected / projected.norm();
}

CmPencil max_sr_cm_pencil(const ChannelSet &ch, const ComplexVector &phases, const ComplexVector &an,
                          const PowerBudget &pw)
{
    const double cm_power = pw.cm_fraction * pw.transmit_power;
    const double an_power = pw.an_fraction * pw.transmit_power;
    const ComplexVector h_b1 = effective_channel(ch, Receiver::bob, phases, cm_power);
    const ComplexVector h_b2 = effective_channel(ch, Receiver::bob, phases, an_power);
    const ComplexVector h_e1 = effective_channel(ch, Receiver::eve, phases, cm_power);
    const ComplexVector h_e2 = effective_channel(ch, Receiver::eve, phases, an_power);

    CmPencil pencil;
    pencil.an_leak_bob = std::norm(h_b2.dot(an));
    pencil.an_leak_eve = std::norm(h_e2.dot(an));

    pencil.numerator = h_b1 * h_b1.adjoint();
    pencil.numerator.diagonal().array() += pencil.an_leak_bob + pw.noise_bob;
    pencil.denominator = h_e1 * h_e1.adjoint();
    pencil.denominator.diagonal().array() += pencil.an_leak_eve + pw.noise_eve;
    return pencil;
}

ComplexVector max_sr_cm(const ChannelSet &ch, const ComplexVector &phases, const ComplexVector &an,
                        const PowerBudget &pw)
{
    const CmPencil pencil = max_sr_cm_pencil(ch, phases, an, pw);
    return dominant_gen_eigvec(pencil.numerator, pencil.denominator).vector;
}

ComplexVector slnr_direction(const ChannelSet &ch, const ComplexVector &cm, const PowerBudget &pw)
{
    const ComplexVector w_bob = cascade_coefficients(ch, Receiver::bob, cm);
    const ComplexVector w_eve = cascade_coefficients(ch, Receiver::eve, cm);
    const double leak_gain = pw.cm_fraction * pw.transmit_power * ch.g_aie;
    const double ridge = pw.noise_eve / static_cast<double>(w_bob.size());

    // B = leak_gain w_e w_e^H + ridge I; B^{-1} w_b by Sherman-Morrison, up to the 1/ridge factor.
    const Complex overlap = w_eve.dot(w_bob);
    const double denom = ridge + leak_gain * w_eve.squaredNorm();
    ComplexVector u = w_bob - w_eve * (leak_gain * overlap / denom);

    const double n = u.norm();
    if (!(n > 0.0))
        return ComplexVector::Zero(u.size());
    u /= n;
    canonicalize_phase(u);
    return u;
}

ComplexVector slnr_phase(const ChannelSet &ch, const ComplexVector &cm, const PowerBudget &pw)
{
    const ComplexVector u = slnr_direction(ch, cm, pw);
    ComplexVector phases(u.size());
    for (Eigen::Index m = 0; m < u.size(); ++m)
        phases(m) = unit_phase_of(u(m));

    const Complex direct = ch.h_ab.dot(cm);
    const Complex cascade = cascade_coefficients(ch, Receiver::bob, cm).dot(phases);
    if (std::abs(cascade) > 0.0)
        phases *= unit_phase_of(direct) / unit_phase_of(cascade);
    return phases;
}

MaxSrSlnrResult max_sr_slnr(const ChannelSet &ch, const PowerBudget &pw, const MaxSrSlnrConfig &cfg)
{
    validate(cfg);
    validate(pw);
    const int n_irs = static_cast<int>(ch.irs_elements());
    if (cfg.initial_phases && cfg.initial_phases->size() != n_irs)
        throw std::invalid_argument("max_sr_slnr: initial theta dimension mismatch");

    const ComplexVector an = an_beamformer(ch);
    const ComplexVector warm_cm = normalized(ch.alice_to_irs, "max_sr_slnr");

    MaxSrSlnrResult result;
    result.secrecy_rate = -1.0;
    result.trace.converged = true;

    for (int run = 0; run < cfg.restarts; ++run)
    {
        BeamformingSolution current;
        current.an = an;
        current.cm = warm_cm;
        current.phases = (run == 0 && cfg.initial_phases)
                             ? *cfg.initial_phases
                             : random_phases(n_irs, splitmix64(cfg.seed + static_cast<std::uint64_t>(run)));

        double rate = evaluate(ch, current, pw).secrecy_rate;
        result.trace.secrecy_rates.push_back(rate);
        if (rate > result.secrecy_rate)
        {
            result.secrecy_rate = rate;
            result.solution = current;
        }

        bool converged = false;
        for (int p = 1; p <= cfg.max_iterations; ++p)
        {
            current.cm = max_sr_cm(ch, current.phases, an, pw);
            current.phases = slnr_phase(ch, current.cm, pw);
            const double next = evaluate(ch, current, pw).secrecy_rate;
            result.trace.secrecy_rates.push_back(next);
            ++result.trace.iterations;
            if (next > result.secrecy_rate)
            {
                result.secrecy_rate = next;
                result.solution = current;
            }
            const bool settled = std::abs(next - rate) <= cfg.epsilon;
            rate = next;
            if (settled)
            {
                converged = true;
                break;
            }
        }
        if (!converged)
        {
            result.trace.converged = false;
            result.trace.hit_iteration_cap = true;
        }
    }
    return result;
}

ComplexVector mrt_cm(const ChannelSet &ch, const MrtVariant &variant, const SteeringConfig &alice)
{
    if (alice.element_count != ch.alice_elements())
        throw std::invalid_argument("mrt_cm: Alice array size disagrees with the channel set");

    switch (variant.target)
    {
    case MrtVariant::Target::toward_ai:
        return normalized(ch.alice_to_irs, "mrt_cm(toward_ai)");
    case MrtVariant::Target::toward_ab:
        return normalized(ch.h_ab, "mrt_cm(toward_ab)");
    case MrtVariant::Target::toward_sum:
        return normalized(ch.alice_to_irs + ch.h_ab, "mrt_cm(toward_sum)");
    case MrtVariant::Target::toward_angle:
        return normalized(steering_vector(variant.angle, alice), "mrt_cm(toward_angle)");
    }
    throw std::invalid_argument("mrt_cm: unknown variant");
}

PhaseAlignment pa_phase_detailed(const ChannelSet &ch, const ComplexVector &cm)
{
    const ComplexVector w = cascade_coefficients(ch, Receiver::bob, cm);
    const double scale = w.size() > 0 ? w.cwiseAbs().maxCoeff() : 0.0;

    PhaseAlignment out;
    out.phases.resize(w.size());
    for (Eigen::Index m = 0; m < w.size(); ++m)
    {
        if (std::abs(w(m)) <= 1e-14 * scale || scale == 0.0)
        {
            out.phases(m) = Complex(1.0, 0.0);
            ++out.degenerate_elements;
        }
        else
        {
            out.phases(m) = w(m) / std::abs(w(m));
        }
    }
    return out;
}

ComplexVector pa_phase(const ChannelSet &ch, const ComplexVector &cm)
{
    return pa_phase_detailed(ch, cm).phases;
}

BeamformingSolution mrt_nsp_pa(const ChannelSet &ch, const PowerBudget &pw, const MrtVariant &variant,
                               const SteeringConfig &alice)
{
    validate(pw);
    BeamformingSolution sol;
    sol.cm = mrt_cm(ch, variant, alice);
    sol.an = an_beamformer(ch);
    sol.phases = pa_phase(ch, sol.cm);
    return sol;
}

ComplexVector random_phases(int irs_elements, std::uint64_t seed)
{
    if (irs_elements < 1)
        throw std::invalid_argument("random_phases: N_s must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    ComplexVector phases(irs_elements);
    for (int m = 0; m < irs_elements; ++m)
        phases(m) = std::polar(1.0, angle(rng));
    return phases;
}

ComplexVector benchmark_phase(BenchmarkPhase kind, int irs_elements, std::uint64_t seed)
{
    if (irs_elements < 1)
        throw std::invalid_argument("benchmark_phase: N_s must be >= 1");
    if (kind == BenchmarkPhase::no_irs)
        return ComplexVector::Zero(irs_elements);
    return random_phases(irs_elements, seed);
}

FlopCount flops_max_sr_slnr(std::uint64_t na, std::uint64_t ns, std::uint64_t d1, std::uint64_t d2)
{
    if (na < 1 || ns < 1 || d1 < 1 || d2 < 1)
        throw std::invalid_argument("flops_max_sr_slnr: arguments must be >= 1");
    // Positive terms first; the subtractions never underflow for arguments >= 1.
    const std::uint64_t inner = ns * ns * ns + 7 * ns * ns + 8 * na * ns + 2 * na * na * na + 4 * na * na - 2 * ns - 2;
    return {d1 * (d2 * inner + 2 * na * na + na - 1)};
}

FlopCount flops_mrt_nsp_pa(std::uint64_t na, std::uint64_t ns)
{
    if (na < 1 || ns < 1)
        throw std::invalid_argument("flops_mrt_nsp_pa: arguments must be >= 1");
    return {2 * ns * ns + 2 * na * ns + 4 * na + 2 * na * na - 2 * ns - 2};
}

} // namespace irsdm
