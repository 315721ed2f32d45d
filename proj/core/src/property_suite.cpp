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

#include "irsdm/property_suite.hpp"

#include "irsdm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

namespace irsdm::verify
{

namespace
{
std::string fmt(const char *pattern, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

ComplexMatrix random_matrix(std::mt19937_64 &rng, Eigen::Index r, Eigen::Index c)
{
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j)
            m(i, j) = Complex(g(rng), g(rng));
    return m;
}

double relative_gap(double a, double b)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

double max_unit_modulus_defect(const ComplexVector &v)
{
    double worst = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        worst = std::max(worst, std::abs(std::abs(v(i)) - 1.0));
    return worst;
}

PowerBudget reference_power()
{
    return make_power_budget(30.0, -40.0, -40.0, 0.8);
}

CheckResult check_nsp(std::uint64_t seed)
{
    double worst_annihilation = 0.0;
    double worst_projector = 0.0;
    std::vector<ChannelSet> cases;
    for (int ns : {1, 16, 128, 1024})
        cases.push_back(reference_channels(16, ns));
    for (int k = 0; k < 10; ++k)
        cases.push_back(random_channels(seed + static_cast<std::uint64_t>(k), 4 + k % 5, 1 + k % 4));

    for (const auto &ch : cases)
    {
        const ComplexVector an = an_beamformer(ch);
        const ComplexMatrix p = an_constraints(ch);
        worst_annihilation = std::max(worst_annihilation, (p * an).cwiseAbs().maxCoeff());

        const ComplexMatrix t = null_space_projector(p);
        const ComplexMatrix q = oracle::row_space_basis(p);
        const ComplexMatrix reference =
            ComplexMatrix::Identity(p.cols(), p.cols()) - q * q.adjoint();
        worst_projector = std::max(worst_projector, (t - reference).cwiseAbs().maxCoeff());
    }
    const bool ok = worst_annihilation <= 1e-10 && worst_projector <= 1e-10;
    return {"NSP orthogonality |P v_AN| <= 1e-10, projector == Gram-Schmidt complement", ok,
            fmt("max |P v_AN| = %.3e, max |T - T_gs| = %.3e", worst_annihilation, worst_projector)};
}

CheckResult check_unit_invariants(std::uint64_t seed)
{
    double worst = 0.0;
    const PowerBudget pw = reference_power();
    for (int ns : {1, 4, 16, 128, 1024})
    {
        const ChannelSet ch = reference_channels(16, ns);
        const SteeringConfig alice{16, 0.5};
        for (const ComplexVector *h : {&ch.h_ab, &ch.h_ae, &ch.h_ib, &ch.h_ie, &ch.alice_to_irs})
        {
            worst = std::max(worst, std::abs(h->norm() - 1.0));
            const double entry = 1.0 / std::sqrt(static_cast<double>(h->size()));
            worst = std::max(worst, (h->cwiseAbs().array() - entry).abs().maxCoeff());
        }
        worst = std::max(worst, std::abs(ch.h_ai.norm() - 1.0));

        for (const auto &variant : {MrtVariant::ai(), MrtVariant::ab(), MrtVariant::sum(), MrtVariant::at(1.2)})
        {
            const BeamformingSolution sol = mrt_nsp_pa(ch, pw, variant, alice);
            worst = std::max({worst, std::abs(sol.cm.norm() - 1.0), std::abs(sol.an.norm() - 1.0),
                              max_unit_modulus_defect(sol.phases)});
        }
        const ComplexVector rnd = random_phases(ns, seed + static_cast<std::uint64_t>(ns));
        worst = std::max(worst, max_unit_modulus_defect(rnd));

        MaxSrSlnrConfig cfg;
        cfg.seed = seed;
        const MaxSrSlnrResult res = max_sr_slnr(ch, pw, cfg);
        worst = std::max({worst, std::abs(res.solution.cm.norm() - 1.0), std::abs(res.solution.an.norm() - 1.0),
                          max_unit_modulus_defect(res.solution.phases)});
        const ComplexVector cm = max_sr_cm(ch, rnd, res.solution.an, pw);
        worst = std::max({worst, std::abs(cm.norm() - 1.0), max_unit_modulus_defect(slnr_phase(ch, cm, pw))});
    }
    return {"unit-norm / unit-modulus invariants <= 1e-10", worst <= 1e-10, fmt("worst defect = %.3e", worst)};
}

CheckResult check_gen_eigvec(const SuiteOptions &opt)
{
    double worst_margin = -std::numeric_limits<double>::infinity(); // sample - solver, relative; must stay <= 0
    for (int k = 0; k < opt.eig_instances; ++k)
    {
        const auto s = opt.seed + 1000 + static_cast<std::uint64_t>(k);
        const int n = 2 + k % 7; // 2..8
        const ComplexMatrix a = random_hermitian_psd(s, n);
        const ComplexMatrix b = random_hermitian_pd(s + 7777, n);
        const double solver = dominant_gen_eigvec(a, b).quotient;
        const double sampled = oracle::sample_max_quotient(a, b, opt.eig_samples, s);
        worst_margin = std::max(worst_margin, (sampled - solver) / std::abs(solver));
    }
    const bool ok = worst_margin <= 1e-12;
    return {"dominant_gen_eigvec >= best of random samples", ok,
            std::to_string(opt.eig_instances) + " instances x " + std::to_string(opt.eig_samples) +
                fmt(" samples, worst (sample - solver)/solver = %.3e", worst_margin)};
}

CheckResult check_pa_grid(const SuiteOptions &opt)
{
    double worst = -1.0;
    const PowerBudget pw = reference_power();
    for (int k = 0; k < opt.pa_grid_instances; ++k)
    {
        const auto s = opt.seed + 5000 + static_cast<std::uint64_t>(k);
        const ChannelSet ch = random_channels(s, 4, 2);
        const ComplexVector cm = random_unit_vector(s, 4);
        const double pa = cascaded_power_bob(ch, cm, pa_phase(ch, cm), pw);
        const auto grid = oracle::grid_max_cascaded_power(ch, cm, pw, {360, 2});
        worst = std::max(worst, (grid.power - pa) / pa);
    }
    return {"PA cascaded power >= 360^2 phase grid at N_s = 2 (1e-9)", worst <= 1e-9,
            fmt("worst (grid - PA)/PA = %.3e", worst)};
}

CheckResult check_scalar_sinr(const SuiteOptions &opt)
{
    double worst = 0.0;
    for (int k = 0; k < opt.sinr_instances; ++k)
    {
        const auto s = opt.seed + 9000 + static_cast<std::uint64_t>(k);
        const int na = 1 + k % 4;
        const int ns = 1 + (k / 4) % 4;
        const ChannelSet ch = random_unstructured_channels(s, na, ns);
        PowerBudget pw;
        pw.transmit_power = 0.5 + static_cast<double>(k % 5);
        pw.cm_fraction = 0.3 + 0.1 * (k % 6);
        pw.an_fraction = 1.0 - pw.cm_fraction;
        pw.noise_bob = 1e-3 * (1 + k % 3);
        pw.noise_eve = 2e-3 * (1 + k % 2);

        BeamformingSolution sol;
        sol.cm = random_unit_vector(s + 1, na);
        sol.an = random_unit_vector(s + 2, na);
        sol.phases = random_phases(ns, s + 3);
        for (Receiver rx : {Receiver::bob, Receiver::eve})
            worst = std::max(worst, relative_gap(sinr(ch, sol, pw, rx), oracle::scalar_sinr(ch, sol, pw, rx)));
    }
    return {"metrics SINR == scalar oracle within 1e-10", worst <= 1e-10,
            std::to_string(opt.sinr_instances) + fmt(" instances, worst relative gap = %.3e", worst)};
}

CheckResult check_keep_best(const SuiteOptions &opt)
{
    const PowerBudget pw = reference_power();
    const ChannelSet ch = reference_channels(16, 128);
    double worst = 0.0;
    bool ok = true;
    for (int k = 0; k < opt.keep_best_seeds; ++k)
    {
        MaxSrSlnrConfig cfg;
        cfg.seed = opt.seed + 300 + static_cast<std::uint64_t>(k);
        const MaxSrSlnrResult res = max_sr_slnr(ch, pw, cfg);
        const auto &tr = res.trace.secrecy_rates;
        const double best = *std::max_element(tr.begin(), tr.end());
        ok = ok && res.secrecy_rate == best && res.secrecy_rate >= tr.front();
        // Reported solution must reproduce the reported rate.
        const double again = evaluate(ch, res.solution, pw).secrecy_rate;
        worst = std::max(worst, std::abs(again - res.secrecy_rate));
    }
    ok = ok && worst <= 1e-12;
    return {"Max-SR-SLNR keep-best: reported SR == max over trace", ok,
            std::to_string(opt.keep_best_seeds) + fmt(" seeds, worst re-evaluation gap = %.3e", worst)};
}
} // namespace

ChannelSet reference_channels(int alice_elements, int irs_elements)
{
    return build_channels(NetworkGeometry{}, {alice_elements, 0.5}, {irs_elements, 0.5}, PathLossModel{});
}

ChannelSet random_channels(std::uint64_t seed, int alice_elements, int irs_elements)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.05, std::numbers::pi - 0.05);
    std::uniform_real_distribution<double> jitter(-5.0, 5.0);
    NetworkGeometry g;
    for (auto *pos : {&g.irs, &g.bob, &g.eve})
        for (double &c : *pos)
            c += jitter(rng);
    g.theta_ai = angle(rng);
    g.theta_ab = angle(rng);
    g.theta_ae = angle(rng);
    g.theta_irs_arrival = angle(rng);
    g.theta_ib = angle(rng);
    g.theta_ie = angle(rng);
    return build_channels(g, {alice_elements, 0.5}, {irs_elements, 0.5}, PathLossModel{});
}

ChannelSet random_unstructured_channels(std::uint64_t seed, int na, int ns)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> gain(0.1, 2.0);
    ChannelSet ch;
    ch.h_ab = random_matrix(rng, na, 1);
    ch.h_ae = random_matrix(rng, na, 1);
    ch.h_ai = random_matrix(rng, ns, na);
    ch.h_ib = random_matrix(rng, ns, 1);
    ch.h_ie = random_matrix(rng, ns, 1);
    ch.alice_to_irs = random_matrix(rng, na, 1);
    ch.irs_from_alice = random_matrix(rng, ns, 1);
    ch.g_ab = gain(rng);
    ch.g_ae = gain(rng);
    ch.g_ai = gain(rng);
    ch.g_ib = gain(rng);
    ch.g_ie = gain(rng);
    ch.g_aib = ch.g_ai * ch.g_ib;
    ch.g_aie = ch.g_ai * ch.g_ie;
    return ch;
}

ComplexVector random_unit_vector(std::uint64_t seed, int n)
{
    std::mt19937_64 rng(seed);
    ComplexVector v = random_matrix(rng, n, 1);
    return v / v.norm();
}

ComplexMatrix random_hermitian_psd(std::uint64_t seed, int n)
{
    std::mt19937_64 rng(seed);
    const ComplexMatrix g = random_matrix(rng, n, 1 + static_cast<Eigen::Index>(seed % static_cast<std::uint64_t>(n)));
    return g * g.adjoint();
}

ComplexMatrix random_hermitian_pd(std::uint64_t seed, int n)
{
    std::mt19937_64 rng(seed);
    const ComplexMatrix g = random_matrix(rng, n, n);
    ComplexMatrix b = g * g.adjoint();
    b.diagonal().array() += 0.1;
    return b;
}

std::vector<CheckResult> run_property_suite(const SuiteOptions &options)
{
    std::vector<CheckResult> out;
    auto guarded = [&](const char *name, auto &&fn) {
        try
        {
            out.push_back(fn());
        }
        catch (const std::exception &e)
        {
            out.push_back({name, false, std::string("threw: ") + e.what()});
        }
    };
    guarded("NSP orthogonality", [&] { return check_nsp(options.seed); });
    guarded("unit invariants", [&] { return check_unit_invariants(options.seed); });
    guarded("dominant_gen_eigvec", [&] { return check_gen_eigvec(options); });
    guarded("PA grid", [&] { return check_pa_grid(options); });
    guarded("scalar SINR", [&] { return check_scalar_sinr(options); });
    guarded("keep-best", [&] { return check_keep_best(options); });
    return out;
}

} // namespace irsdm::verify
