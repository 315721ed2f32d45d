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

#ifndef IRSDM_PROPERTY_SUITE_HPP
#define IRSDM_PROPERTY_SUITE_HPP

#include "irsdm/beamformers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace irsdm::verify
{

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteOptions
{
    int eig_instances = 50;
    std::size_t eig_samples = 100000;
    int sinr_instances = 50;
    int pa_grid_instances = 5;
    int keep_best_seeds = 20;
    std::uint64_t seed = 20240601;
};

// Oracle-backed property checks; every entry reports its worst observed deviation.
std::vector<CheckResult> run_property_suite(const SuiteOptions &options = {});

// Channels from the default geometry with N_a Alice and N_s IRS elements.
ChannelSet reference_channels(int alice_elements, int irs_elements);

// Steering-based channels with random angles and positions near the default layout.
ChannelSet random_channels(std::uint64_t seed, int alice_elements, int irs_elements);

// Unstructured complex channels (random entries, random gains) for algebraic cross-checks.
ChannelSet random_unstructured_channels(std::uint64_t seed, int alice_elements, int irs_elements);

ComplexVector random_unit_vector(std::uint64_t seed, int n);

// Random Hermitian PSD (rank <= n) and Hermitian PD matrices.
ComplexMatrix random_hermitian_psd(std::uint64_t seed, int n);
ComplexMatrix random_hermitian_pd(std::uint64_t seed, int n);

} // namespace irsdm::verify

#endif
