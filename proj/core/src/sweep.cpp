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

#include "irsdm/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <utility>

namespace irsdm
{

namespace
{
std::uint64_t mix(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// A method evaluated at one IRS size; the label is what lands in the CSV.
struct Lane
{
    MethodSpec spec;
    std::string label;
    std::optional<int> irs_elements;
};

std::vector<Lane> expand_lanes(const ExperimentConfig &cfg)
{
    std::vector<Lane> lanes;
    if (cfg.irs_elements_list.empty())
    {
        for (const auto &m : cfg.methods)
            lanes.push_back({parse_method(m), m, std::nullopt});
        return lanes;
    }
    for (int n : cfg.irs_elements_list)
        for (const auto &m : cfg.methods)
            lanes.push_back({parse_method(m), m + "@ns=" + std::to_string(n), n});
    return lanes;
}

struct Task
{
    std::size_t point;
    std::size_t lane;
    int trial;
};
} // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t axis_index, std::uint64_t method_index,
                         std::uint64_t trial_index)
{
    std::uint64_t h = mix(master);
    h = mix(h ^ axis_index);
    h = mix(h ^ method_index);
    return mix(h ^ trial_index);
}

Scenario make_scenario(const ExperimentConfig &cfg, double axis_value, int irs_elements)
{
    NetworkGeometry geom = cfg.geometry;
    Scenario sc;
    sc.alice = {cfg.alice_elements, cfg.spacing_over_wavelength};
    sc.irs = {irs_elements, cfg.spacing_over_wavelength};

    double transmit_dbm = cfg.transmit_dbm;
    switch (cfg.axis)
    {
    case SweepAxis::irs_elements:
        sc.irs.element_count = static_cast<int>(axis_value);
        break;
    case SweepAxis::d_ab: {
        // Slide Bob along the Alice->Bob ray.
        const double d = distance(geom.alice, geom.bob);
        if (!(d > 0.0))
            throw std::invalid_argument("d_ab sweep: Bob coincides with Alice");
        for (int k = 0; k < 3; ++k)
            geom.bob[k] = geom.alice[k] + (geom.bob[k] - geom.alice[k]) * (axis_value / d);
        break;
    }
    case SweepAxis::theta_cm:
        sc.theta_cm = axis_value * std::numbers::pi / 180.0;
        break;
    case SweepAxis::snr_db:
        transmit_dbm = cfg.noise_bob_dbm + axis_value;
        break;
    }

    sc.channels = build_channels(geom, sc.alice, sc.irs, cfg.path_loss);
    if (cfg.axis == SweepAxis::snr_db && cfg.snr_reference == SnrReference::direct_link)
        transmit_dbm -= 10.0 * std::log10(sc.channels.g_ab);
    sc.power = make_power_budget(transmit_dbm, cfg.noise_bob_dbm, cfg.noise_eve_dbm, cfg.cm_fraction);
    return sc;
}

TrialOutcome run_trial(const MethodSpec &method, const Scenario &sc, const ExperimentConfig &cfg,
                       std::uint64_t seed)
{
    const MrtVariant variant = sc.theta_cm ? MrtVariant::at(*sc.theta_cm) : method.variant;
    TrialOutcome out;
    switch (method.kind)
    {
    case MethodKind::max_sr_slnr: {
        MaxSrSlnrConfig alg;
        alg.epsilon = cfg.epsilon;
        alg.max_iterations = cfg.max_iterations;
        alg.restarts = cfg.restarts;
        alg.seed = seed;
        const MaxSrSlnrResult res = max_sr_slnr(sc.channels, sc.power, alg);
        out.secrecy_rate = res.secrecy_rate;
        out.iterations = res.trace.iterations;
        break;
    }
    case MethodKind::mrt_nsp_pa: {
        const BeamformingSolution sol = mrt_nsp_pa(sc.channels, sc.power, variant, sc.alice);
        out.secrecy_rate = evaluate(sc.channels, sol, sc.power).secrecy_rate;
        break;
    }
    case MethodKind::random_phase:
    case MethodKind::no_irs: {
        BeamformingSolution sol;
        sol.cm = mrt_cm(sc.channels, variant, sc.alice);
        sol.an = an_beamformer(sc.channels);
        const auto kind = method.kind == MethodKind::no_irs ? BenchmarkPhase::no_irs : BenchmarkPhase::random_phase;
        sol.phases = benchmark_phase(kind, static_cast<int>(sc.channels.irs_elements()), seed);
        out.secrecy_rate = evaluate(sc.channels, sol, sc.power).secrecy_rate;
        break;
    }
    }
    return out;
}

SweepResult run_sweep(const ExperimentConfig &cfg, int threads)
{
    validate(cfg);
    const std::vector<Lane> lanes = expand_lanes(cfg);
    const std::size_t n_points = cfg.axis_values.size();

    // Channels depend only on (axis point, N_s); build each once.
    std::map<std::pair<std::size_t, int>, Scenario> scenarios;
    auto scenario_key = [&](std::size_t point, const Lane &lane) {
        const int ns = cfg.axis == SweepAxis::irs_elements ? static_cast<int>(cfg.axis_values[point])
                                                           : lane.irs_elements.value_or(cfg.irs_elements);
        return std::make_pair(point, ns);
    };
    for (std::size_t p = 0; p < n_points; ++p)
        for (const auto &lane : lanes)
        {
            const auto key = scenario_key(p, lane);
            if (!scenarios.count(key))
                scenarios.emplace(key, make_scenario(cfg, cfg.axis_values[p], key.second));
        }

    std::vector<Task> tasks;
    for (std::size_t p = 0; p < n_points; ++p)
        for (std::size_t l = 0; l < lanes.size(); ++l)
        {
            const int trials = lanes[l].spec.randomized() ? cfg.trials : 1;
            for (int t = 0; t < trials; ++t)
                tasks.push_back({p, l, t});
        }

    std::vector<TrialOutcome> outcomes(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
        {
            const Task &task = tasks[i];
            try
            {
                const Scenario &sc = scenarios.at(scenario_key(task.point, lanes[task.lane]));
                const std::uint64_t seed = trial_seed(cfg.seed, task.point, task.lane,
                                                      static_cast<std::uint64_t>(task.trial));
                outcomes[i] = run_trial(lanes[task.lane].spec, sc, cfg, seed);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };

    unsigned n_threads = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    if (n_threads <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n_threads; ++k)
            pool.emplace_back(worker);
        for (auto &th : pool)
            th.join();
    }
    for (const auto &err : errors)
        if (err)
            std::rethrow_exception(err);

    // Ordered reduction: tasks are grouped by (point, lane) in trial order.
    SweepResult result;
    std::size_t i = 0;
    for (std::size_t p = 0; p < n_points; ++p)
        for (std::size_t l = 0; l < lanes.size(); ++l)
        {
            std::vector<double> rates;
            double iters = 0.0;
            for (; i < tasks.size() && tasks[i].point == p && tasks[i].lane == l; ++i)
            {
                rates.push_back(outcomes[i].secrecy_rate);
                iters += outcomes[i].iterations;
            }
            const double n = static_cast<double>(rates.size());
            double mean = 0.0;
            for (double r : rates)
                mean += r;
            mean /= n;
            double var = 0.0;
            for (double r : rates)
                var += (r - mean) * (r - mean);

            const Scenario &sc = scenarios.at(scenario_key(p, lanes[l]));
            SweepRow row;
            row.axis = axis_name(cfg.axis);
            row.axis_value = cfg.axis_values[p];
            row.method = lanes[l].label;
            row.mean_sr = mean;
            row.std_sr = std::sqrt(var / n);
            row.mean_iters = iters / n;
            const auto na = static_cast<std::uint64_t>(sc.channels.alice_elements());
            const auto ns = static_cast<std::uint64_t>(sc.channels.irs_elements());
            if (lanes[l].spec.kind == MethodKind::max_sr_slnr)
            {
                const auto d = static_cast<std::uint64_t>(std::max(1.0, std::ceil(row.mean_iters - 1e-9)));
                row.flops = flops_max_sr_slnr(na, ns, d, d).total;
            }
            else
            {
                row.flops = flops_mrt_nsp_pa(na, ns).total;
            }
            result.rows.push_back(std::move(row));
        }
    return result;
}

SweepResult flops_table(int alice_elements, const std::vector<int> &irs_elements, std::uint64_t d1,
                        std::uint64_t d2)
{
    if (alice_elements < 1)
        throw std::invalid_argument("flops: N_a must be >= 1");
    SweepResult result;
    for (int ns : irs_elements)
    {
        if (ns < 1)
            throw std::invalid_argument("flops: N_s values must be >= 1");
        const auto na = static_cast<std::uint64_t>(alice_elements);
        const auto n = static_cast<std::uint64_t>(ns);
        SweepRow slnr{"ns", static_cast<double>(ns), "max-sr-slnr", 0.0, 0.0, static_cast<double>(d2),
                      flops_max_sr_slnr(na, n, d1, d2).total};
        SweepRow mrt{"ns", static_cast<double>(ns), "mrt-nsp-pa", 0.0, 0.0, 0.0, flops_mrt_nsp_pa(na, n).total};
        result.rows.push_back(std::move(slnr));
        result.rows.push_back(std::move(mrt));
    }
    return result;
}

} // namespace irsdm
