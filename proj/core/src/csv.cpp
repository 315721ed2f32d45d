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

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace irsdm
{

namespace
{
std::string number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}
} // namespace

std::string to_csv(const SweepResult &result)
{
    std::string out = csv_header;
    out += '\n';
    for (const auto &row : result.rows)
    {
        out += row.axis;
        out += ',';
        out += number(row.axis_value);
        out += ',';
        out += row.method;
        out += ',';
        out += number(row.mean_sr);
        out += ',';
        out += number(row.std_sr);
        out += ',';
        out += number(row.mean_iters);
        out += ',';
        out += std::to_string(row.flops);
        out += '\n';
    }
    return out;
}

void emit_csv(const SweepResult &result, const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    const std::string text = to_csv(result);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out)
        throw std::runtime_error("failed writing " + path.string());
}

} // namespace irsdm
