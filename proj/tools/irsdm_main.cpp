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

// irsdm: sweep runner, FLOP tables and the oracle property suite.

#include "irsdm/experiment.hpp"
#include "irsdm/property_suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

namespace
{
int run_sweep_command(const std::string &config_path, const std::string &out_path, std::optional<std::uint64_t> seed,
                      int threads)
{
    irsdm::ExperimentConfig cfg = irsdm::load_config(config_path);
    if (seed)
        cfg.seed = *seed;
    const auto start = std::chrono::steady_clock::now();
    const irsdm::SweepResult result = irsdm::run_sweep(cfg, threads);
    irsdm::emit_csv(result, out_path);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << cfg.name << ": " << result.rows.size() << " rows -> " << out_path << " (" << secs << " s)\n";
    return 0;
}

int run_verify_command()
{
    const auto checks = irsdm::verify::run_property_suite();
    bool all = true;
    for (const auto &c : checks)
    {
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " -- " << c.detail << '\n';
        all = all && c.passed;
    }
    std::cout << (all ? "property suite passed" : "property suite FAILED") << '\n';
    return all ? 0 : 1;
}
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Secrecy-rate beamforming for IRS-aided directional modulation"};
    app.require_subcommand(1);

    auto *sweep = app.add_subcommand("sweep", "Run a config-driven parameter sweep and write a CSV table");
    std::string config_path;
    std::string out_path;
    std::uint64_t seed_value = 0;
    int threads = 0;
    sweep->add_option("--config", config_path, "Experiment YAML file")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out_path, "Output CSV path")->required();
    auto *seed_opt = sweep->add_option("--seed", seed_value, "Master seed (overrides the config)");
    sweep->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)")->check(CLI::NonNegativeNumber);

    auto *flops = app.add_subcommand("flops", "Tabulate the FLOP-count polynomials of both methods");
    int na = 16;
    std::vector<int> ns_list;
    std::uint64_t d1 = 1;
    std::uint64_t d2 = 1;
    std::string flops_out;
    flops->add_option("--na", na, "Alice antenna count")->required()->check(CLI::PositiveNumber);
    flops->add_option("--ns-list", ns_list, "IRS sizes, comma separated")->required()->delimiter(',');
    flops->add_option("--d1", d1, "Outer iteration count D1")->required()->check(CLI::PositiveNumber);
    flops->add_option("--d2", d2, "Inner iteration count D2")->required()->check(CLI::PositiveNumber);
    flops->add_option("--out", flops_out, "Output CSV path")->required();

    app.add_subcommand("verify", "Run the oracle property suite");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        // --help lands here too and exits 0; usage errors map to 2.
        return app.exit(e) == 0 ? 0 : 2;
    }

    try
    {
        if (sweep->parsed())
        {
            std::optional<std::uint64_t> seed;
            if (seed_opt->count() > 0)
                seed = seed_value;
            return run_sweep_command(config_path, out_path, seed, threads);
        }
        if (flops->parsed())
        {
            irsdm::emit_csv(irsdm::flops_table(na, ns_list, d1, d2), flops_out);
            return 0;
        }
        return run_verify_command();
    }
    catch (const std::exception &e)
    {
        std::cerr << "irsdm: error: " << e.what() << '\n';
        return 1;
    }
}
