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

#ifndef IRSDM_EXPERIMENT_HPP
#define IRSDM_EXPERIMENT_HPP

#include "irsdm/beamformers.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace irsdm
{

enum class SweepAxis
{
    irs_elements, // "ns"
    snr_db,       // "snr_db"
    d_ab,         // "d_ab_m"
    theta_cm      // "theta_cm_deg"
};

enum class SnrReference
{
    transmit,   // SNR = P_t / sigma_b^2
    direct_link // SNR = P_t g_ab / sigma_b^2
};

enum class MethodKind
{
    max_sr_slnr,
    mrt_nsp_pa,
    random_phase,
    no_irs
};

struct MethodSpec
{
    std::string name;
    MethodKind kind = MethodKind::mrt_nsp_pa;
    MrtVariant variant; // CM direction for the MRT-based methods
    bool randomized() const { return kind == MethodKind::max_sr_slnr || kind == MethodKind::random_phase; }
};

// Known names: max-sr-slnr, mrt-nsp-pa, mrt-nsp-pa-ai, mrt-nsp-pa-ab, mrt-nsp-pa-sum,
// random-phase, no-irs. Throws std::invalid_argument otherwise.
MethodSpec parse_method(const std::string &name);

const char *axis_name(SweepAxis axis);
SweepAxis parse_axis(const std::string &name);

struct ExperimentConfig
{
    std::string name = "experiment";
    NetworkGeometry geometry;

    int alice_elements = 16;
    int irs_elements = 128;
    std::vector<int> irs_elements_list; // optional: repeat every method per N_s (non-ns axes)
    double spacing_over_wavelength = 0.5;

    double transmit_dbm = 30.0;
    double noise_bob_dbm = -40.0;
    double noise_eve_dbm = -40.0;
    double cm_fraction = 0.8;

    PathLossModel path_loss;

    double epsilon = 1e-3;
    int max_iterations = 100;
    int restarts = 1;

    std::vector<std::string> methods{"max-sr-slnr", "mrt-nsp-pa", "random-phase", "no-irs"};
    SweepAxis axis = SweepAxis::irs_elements;
    std::vector<double> axis_values{16, 32, 64, 128, 256, 512, 1024};
    SnrReference snr_reference = SnrReference::transmit;

    int trials = 100;
    std::uint64_t seed = 1;
};

// Throws std::invalid_argument describing the first problem found.
void validate(const ExperimentConfig &cfg);

ExperimentConfig parse_config(const std::string &yaml_text);
ExperimentConfig load_config(const std::filesystem::path &path);

struct SweepRow
{
    std::string axis;
    double axis_value = 0.0;
    std::string method;
    double mean_sr = 0.0;
    double std_sr = 0.0;
    double mean_iters = 0.0;
    std::uint64_t flops = 0;
};

struct SweepResult
{
    std::vector<SweepRow> rows;
};

// One fully resolved simulation point.
struct Scenario
{
    ChannelSet channels;
    PowerBudget power;
    SteeringConfig alice;
    SteeringConfig irs;
    std::optional<double> theta_cm; // radians, theta_cm axis only
};

Scenario make_scenario(const ExperimentConfig &cfg, double axis_value, int irs_elements);

struct TrialOutcome
{
    double secrecy_rate = 0.0;
    int iterations = 0;
};

TrialOutcome run_trial(const MethodSpec &method, const Scenario &scenario, const ExperimentConfig &cfg,
                       std::uint64_t seed);

// Independent stream per (axis point, method, trial).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t axis_index, std::uint64_t method_index,
                         std::uint64_t trial_index);

// threads <= 0 uses the hardware concurrency. Output order is independent of the thread count.
SweepResult run_sweep(const ExperimentConfig &cfg, int threads = 1);

inline constexpr const char *csv_header = "axis,axis_value,method,mean_sr,std_sr,mean_iters,flops";

std::string to_csv(const SweepResult &result);
void emit_csv(const SweepResult &result, const std::filesystem::path &path);

// FLOP table rows (axis "ns") for both methods.
SweepResult flops_table(int alice_elements, const std::vector<int> &irs_elements, std::uint64_t d1,
                        std::uint64_t d2);

} // namespace irsdm

#endif
