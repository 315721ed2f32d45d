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

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace irsdm
{

namespace
{
double deg2rad(double deg)
{
    return deg * std::numbers::pi / 180.0;
}

void check_keys(const YAML::Node &node, const std::string &section, const std::set<std::string> &allowed)
{
    if (!node.IsMap())
        throw std::invalid_argument("config: section '" + section + "' must be a mapping");
    for (const auto &kv : node)
    {
        const auto key = kv.first.as<std::string>();
        if (!allowed.count(key))
            throw std::invalid_argument("config: unknown key '" + key + "' in '" + section + "'");
    }
}

template <typename T>
void read(const YAML::Node &node, const char *key, T &out)
{
    if (node[key])
        out = node[key].as<T>();
}

void read_position(const YAML::Node &node, const char *key, Position &out)
{
    if (!node[key])
        return;
    const auto v = node[key].as<std::vector<double>>();
    if (v.size() != 3)
        throw std::invalid_argument(std::string("config: '") + key + "' needs three coordinates");
    out = {v[0], v[1], v[2]};
}

void read_angle_deg(const YAML::Node &node, const char *key, double &out)
{
    if (node[key])
        out = deg2rad(node[key].as<double>());
}

void read_optional_angle_deg(const YAML::Node &node, const char *key, std::optional<double> &out)
{
    if (node[key])
        out = deg2rad(node[key].as<double>());
}

std::vector<double> read_axis_values(const YAML::Node &sweep)
{
    if (sweep["values"])
    {
        if (sweep["from"] || sweep["to"] || sweep["step"])
            throw std::invalid_argument("config: sweep takes either 'values' or 'from/to/step'");
        return sweep["values"].as<std::vector<double>>();
    }
    if (!(sweep["from"] && sweep["to"] && sweep["step"]))
        throw std::invalid_argument("config: sweep needs 'values' or all of 'from', 'to', 'step'");
    const double from = sweep["from"].as<double>();
    const double to = sweep["to"].as<double>();
    const double step = sweep["step"].as<double>();
    if (!(step > 0.0) || to < from)
        throw std::invalid_argument("config: sweep range must have step > 0 and to >= from");
    std::vector<double> values;
    const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9));
    for (long k = 0; k <= count; ++k)
        values.push_back(from + static_cast<double>(k) * step);
    return values;
}
} // namespace

MethodSpec parse_method(const std::string &name)
{
    MethodSpec spec;
    spec.name = name;
    if (name == "max-sr-slnr")
        spec.kind = MethodKind::max_sr_slnr;
    else if (name == "mrt-nsp-pa" || name == "mrt-nsp-pa-ai")
        spec.variant = MrtVariant::ai();
    else if (name == "mrt-nsp-pa-ab")
        spec.variant = MrtVariant::ab();
    else if (name == "mrt-nsp-pa-sum")
        spec.variant = MrtVariant::sum();
    else if (name == "random-phase")
        spec.kind = MethodKind::random_phase;
    else if (name == "no-irs")
        spec.kind = MethodKind::no_irs;
    else
        throw std::invalid_argument("unknown method '" + name + "'");
    return spec;
}

const char *axis_name(SweepAxis axis)
{
    switch (axis)
    {
    case SweepAxis::irs_elements:
        return "ns";
    case SweepAxis::snr_db:
        return "snr_db";
    case SweepAxis::d_ab:
        return "d_ab_m";
    case SweepAxis::theta_cm:
        return "theta_cm_deg";
    }
    return "?";
}

SweepAxis parse_axis(const std::string &name)
{
    for (auto axis : {SweepAxis::irs_elements, SweepAxis::snr_db, SweepAxis::d_ab, SweepAxis::theta_cm})
        if (name == axis_name(axis))
            return axis;
    throw std::invalid_argument("unknown sweep axis '" + name + "' (expected ns, snr_db, d_ab_m, theta_cm_deg)");
}

void validate(const ExperimentConfig &cfg)
{
    auto fail = [](const std::string &msg) { throw std::invalid_argument("config: " + msg); };

    if (cfg.methods.empty())
        fail("at least one method is required");
    std::set<std::string> seen;
    for (const auto &m : cfg.methods)
    {
        const MethodSpec spec = parse_method(m);
        if (!seen.insert(m).second)
            fail("duplicate method '" + m + "'");
        if (cfg.axis == SweepAxis::theta_cm && spec.kind == MethodKind::max_sr_slnr)
            fail("max-sr-slnr has no CM direction to sweep on the theta_cm_deg axis");
    }
    if (cfg.axis_values.empty())
        fail("sweep needs at least one axis value");
    if (cfg.trials < 1)
        fail("trials must be >= 1");
    if (cfg.alice_elements < 1 || cfg.irs_elements < 1)
        fail("array sizes must be >= 1");
    if (!(cfg.spacing_over_wavelength > 0.0))
        fail("spacing_over_wavelength must be positive");
    if (!(cfg.cm_fraction > 0.0 && cfg.cm_fraction < 1.0))
        fail("cm_fraction must lie in (0, 1)");
    if (!(cfg.epsilon > 0.0) || cfg.max_iterations < 1 || cfg.restarts < 1)
        fail("algorithm settings need epsilon > 0, max_iterations >= 1, restarts >= 1");
    for (int n : cfg.irs_elements_list)
        if (n < 1)
            fail("irs_elements_list entries must be >= 1");
    if (!cfg.irs_elements_list.empty() && cfg.axis == SweepAxis::irs_elements)
        fail("irs_elements_list cannot be combined with the ns axis");

    for (double v : cfg.axis_values)
    {
        if (!std::isfinite(v))
            fail("axis values must be finite");
        switch (cfg.axis)
        {
        case SweepAxis::irs_elements:
            if (v < 1.0 || v != std::floor(v))
                fail("ns axis values must be positive integers");
            break;
        case SweepAxis::d_ab:
            if (!(v > 0.0))
                fail("d_ab_m axis values must be positive");
            break;
        case SweepAxis::theta_cm:
            if (v < 0.0 || v > 180.0)
                fail("theta_cm_deg axis values must lie in [0, 180]");
            break;
        case SweepAxis::snr_db:
            break;
        }
    }
    validate(cfg.geometry);
    validate(cfg.path_loss);
}

ExperimentConfig parse_config(const std::string &yaml_text)
{
    YAML::Node root;
    try
    {
        root = YAML::Load(yaml_text);
    }
    catch (const YAML::Exception &e)
    {
        throw std::invalid_argument(std::string("config: YAML parse error: ") + e.what());
    }

    ExperimentConfig cfg;
    if (!root || root.IsNull())
    {
        validate(cfg);
        return cfg;
    }

    try
    {
        check_keys(root, "<root>",
                   {"name", "geometry", "arrays", "power", "path_loss", "algorithm", "methods", "sweep", "trials",
                    "seed"});
        read(root, "name", cfg.name);
        read(root, "trials", cfg.trials);
        read(root, "seed", cfg.seed);
        if (root["methods"])
            cfg.methods = root["methods"].as<std::vector<std::string>>();

        if (const auto g = root["geometry"])
        {
            check_keys(g, "geometry",
                       {"alice", "irs", "bob", "eve", "irs_axis", "theta_ai_deg", "theta_ab_deg", "theta_ae_deg",
                        "theta_irs_arrival_deg", "theta_ib_deg", "theta_ie_deg"});
            read_position(g, "alice", cfg.geometry.alice);
            read_position(g, "irs", cfg.geometry.irs);
            read_position(g, "bob", cfg.geometry.bob);
            read_position(g, "eve", cfg.geometry.eve);
            read_position(g, "irs_axis", cfg.geometry.irs_axis);
            read_angle_deg(g, "theta_ai_deg", cfg.geometry.theta_ai);
            read_angle_deg(g, "theta_ab_deg", cfg.geometry.theta_ab);
            read_angle_deg(g, "theta_ae_deg", cfg.geometry.theta_ae);
            read_optional_angle_deg(g, "theta_irs_arrival_deg", cfg.geometry.theta_irs_arrival);
            read_optional_angle_deg(g, "theta_ib_deg", cfg.geometry.theta_ib);
            read_optional_angle_deg(g, "theta_ie_deg", cfg.geometry.theta_ie);
        }
        if (const auto a = root["arrays"])
        {
            check_keys(a, "arrays", {"alice_elements", "irs_elements", "irs_elements_list", "spacing_over_wavelength"});
            read(a, "alice_elements", cfg.alice_elements);
            read(a, "irs_elements", cfg.irs_elements);
            read(a, "irs_elements_list", cfg.irs_elements_list);
            read(a, "spacing_over_wavelength", cfg.spacing_over_wavelength);
        }
        if (const auto p = root["power"])
        {
            check_keys(p, "power", {"transmit_dbm", "noise_bob_dbm", "noise_eve_dbm", "cm_fraction"});
            read(p, "transmit_dbm", cfg.transmit_dbm);
            read(p, "noise_bob_dbm", cfg.noise_bob_dbm);
            read(p, "noise_eve_dbm", cfg.noise_eve_dbm);
            read(p, "cm_fraction", cfg.cm_fraction);
        }
        if (const auto l = root["path_loss"])
        {
            check_keys(l, "path_loss", {"reference_gain", "exponent", "irs_aperture_gain"});
            read(l, "reference_gain", cfg.path_loss.reference_gain);
            read(l, "exponent", cfg.path_loss.exponent);
            read(l, "irs_aperture_gain", cfg.path_loss.irs_aperture_gain);
        }
        if (const auto al = root["algorithm"])
        {
            check_keys(al, "algorithm", {"epsilon", "max_iterations", "restarts"});
            read(al, "epsilon", cfg.epsilon);
            read(al, "max_iterations", cfg.max_iterations);
            read(al, "restarts", cfg.restarts);
        }
        if (const auto s = root["sweep"])
        {
            check_keys(s, "sweep", {"axis", "values", "from", "to", "step", "snr_reference"});
            if (!s["axis"])
                throw std::invalid_argument("config: sweep.axis is required");
            cfg.axis = parse_axis(s["axis"].as<std::string>());
            cfg.axis_values = read_axis_values(s);
            if (s["snr_reference"])
            {
                const auto ref = s["snr_reference"].as<std::string>();
                if (ref == "transmit")
                    cfg.snr_reference = SnrReference::transmit;
                else if (ref == "direct_link")
                    cfg.snr_reference = SnrReference::direct_link;
                else
                    throw std::invalid_argument("config: snr_reference must be transmit or direct_link");
            }
        }
    }
    catch (const YAML::Exception &e)
    {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }

    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

} // namespace irsdm
