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

#include "irsdm/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace irsdm
{

namespace
{
void check_angle(double theta, const char *name)
{
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi)
        throw std::invalid_argument(std::string(name) + " must lie in [0, pi]");
}

double norm3(const Position &p)
{
    return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}
} // namespace

void validate(const SteeringConfig &cfg)
{
    if (cfg.element_count < 1)
        throw std::invalid_argument("steering config: element count must be >= 1");
    if (!(cfg.spacing_over_wavelength > 0.0) || !std::isfinite(cfg.spacing_over_wavelength))
        throw std::invalid_argument("steering config: spacing must be positive");
}

void validate(const PathLossModel &model)
{
    if (!(model.reference_gain > 0.0) || !std::isfinite(model.reference_gain))
        throw std::invalid_argument("path loss: reference gain must be positive");
    if (!(model.exponent >= 0.0) || !std::isfinite(model.exponent))
        throw std::invalid_argument("path loss: exponent must be nonnegative");
}

void validate(const NetworkGeometry &geom)
{
    const struct
    {
        const Position *a, *b;
        const char *name;
    } links[] = {{&geom.alice, &geom.irs, "Alice-IRS"},   {&geom.alice, &geom.bob, "Alice-Bob"},
                 {&geom.alice, &geom.eve, "Alice-Eve"},   {&geom.irs, &geom.bob, "IRS-Bob"},
                 {&geom.irs, &geom.eve, "IRS-Eve"}};
    for (const auto &link : links)
        if (!(distance(*link.a, *link.b) > 0.0))
            throw std::invalid_argument(std::string("geometry: zero ") + link.name + " distance");

    check_angle(geom.theta_ai, "theta_ai");
    check_angle(geom.theta_ab, "theta_ab");
    check_angle(geom.theta_ae, "theta_ae");
    if (geom.theta_irs_arrival)
        check_angle(*geom.theta_irs_arrival, "theta_irs_arrival");
    if (geom.theta_ib)
        check_angle(*geom.theta_ib, "theta_ib");
    if (geom.theta_ie)
        check_angle(*geom.theta_ie, "theta_ie");
    if (!(norm3(geom.irs_axis) > 0.0))
        throw std::invalid_argument("geometry: IRS axis must be nonzero");
}

ComplexVector steering_vector(double theta, const SteeringConfig &cfg)
{
    validate(cfg);
    check_angle(theta, "steering angle");

    const int n_elem = cfg.element_count;
    const double centre = 0.5 * (n_elem + 1);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_elem));
    const double c = std::cos(theta);

    ComplexVector h(n_elem);
    for (int n = 1; n <= n_elem; ++n)
    {
        const double phi = -cfg.spacing_over_wavelength * (n - centre) * c;
        h(n - 1) = std::polar(scale, -2.0 * std::numbers::pi * phi);
    }
    return h;
}

double path_loss(double distance, const PathLossModel &model)
{
    validate(model);
    if (!(distance > 0.0) || !std::isfinite(distance))
        throw std::invalid_argument("path_loss: distance must be positive, got " + std::to_string(distance));
    return model.reference_gain * std::pow(distance, -model.exponent);
}

double distance(const Position &a, const Position &b)
{
    return norm3({b[0] - a[0], b[1] - a[1], b[2] - a[2]});
}

double axis_angle(const Position &from, const Position &to, const Position &axis)
{
    const Position dir{to[0] - from[0], to[1] - from[1], to[2] - from[2]};
    const double denom = norm3(dir) * norm3(axis);
    if (!(denom > 0.0))
        throw std::invalid_argument("axis_angle: degenerate direction or axis");
    const double c = (dir[0] * axis[0] + dir[1] * axis[1] + dir[2] * axis[2]) / denom;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

ChannelSet build_channels(const NetworkGeometry &geom, const SteeringConfig &alice,
                          const SteeringConfig &irs, const PathLossModel &model)
{
    validate(geom);
    validate(alice);
    validate(irs);
    validate(model);

    ChannelSet ch;
    ch.theta_ai = geom.theta_ai;
    ch.theta_ab = geom.theta_ab;
    ch.theta_ae = geom.theta_ae;
    ch.theta_irs_arrival = geom.theta_irs_arrival.value_or(axis_angle(geom.irs, geom.alice, geom.irs_axis));
    ch.theta_ib = geom.theta_ib.value_or(axis_angle(geom.irs, geom.bob, geom.irs_axis));
    ch.theta_ie = geom.theta_ie.value_or(axis_angle(geom.irs, geom.eve, geom.irs_axis));

    ch.h_ab = steering_vector(ch.theta_ab, alice);
    ch.h_ae = steering_vector(ch.theta_ae, alice);
    ch.alice_to_irs = steering_vector(ch.theta_ai, alice);
    ch.irs_from_alice = steering_vector(ch.theta_irs_arrival, irs);
    ch.h_ai = ch.irs_from_alice * ch.alice_to_irs.adjoint();
    ch.h_ib = steering_vector(ch.theta_ib, irs);
    ch.h_ie = steering_vector(ch.theta_ie, irs);

    const double aperture = model.irs_aperture_gain ? static_cast<double>(irs.element_count) : 1.0;
    ch.g_ab = path_loss(distance(geom.alice, geom.bob), model);
    ch.g_ae = path_loss(distance(geom.alice, geom.eve), model);
    ch.g_ai = aperture * path_loss(distance(geom.alice, geom.irs), model);
    ch.g_ib = aperture * path_loss(distance(geom.irs, geom.bob), model);
    ch.g_ie = aperture * path_loss(distance(geom.irs, geom.eve), model);
    ch.g_aib = ch.g_ai * ch.g_ib;
    ch.g_aie = ch.g_ai * ch.g_ie;
    return ch;
}

} // namespace irsdm
