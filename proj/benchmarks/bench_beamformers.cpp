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

#include <benchmark/benchmark.h>

using namespace irsdm;

namespace
{
ChannelSet reference(int na, int ns)
{
    return build_channels(NetworkGeometry{}, {na, 0.5}, {ns, 0.5}, PathLossModel{});
}
} // namespace

static void BM_MrtNspPa(benchmark::State &state)
{
    const int ns = static_cast<int>(state.range(0));
    const ChannelSet ch = reference(16, ns);
    const PowerBudget pw;
    for (auto _ : state)
        benchmark::DoNotOptimize(mrt_nsp_pa(ch, pw, MrtVariant::ai(), {16, 0.5}));
    state.counters["flops"] = static_cast<double>(flops_mrt_nsp_pa(16, static_cast<std::uint64_t>(ns)).total);
}
BENCHMARK(BM_MrtNspPa)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

static void BM_MaxSrSlnr(benchmark::State &state)
{
    const int ns = static_cast<int>(state.range(0));
    const ChannelSet ch = reference(16, ns);
    const PowerBudget pw;
    MaxSrSlnrConfig cfg;
    cfg.seed = 1;
    int iterations = 0;
    for (auto _ : state)
    {
        const auto res = max_sr_slnr(ch, pw, cfg);
        iterations = res.trace.iterations;
        benchmark::DoNotOptimize(res.secrecy_rate);
    }
    state.counters["iterations"] = iterations;
}
BENCHMARK(BM_MaxSrSlnr)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

static void BM_AnBeamformer(benchmark::State &state)
{
    const ChannelSet ch = reference(16, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(an_beamformer(ch));
}
BENCHMARK(BM_AnBeamformer)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
