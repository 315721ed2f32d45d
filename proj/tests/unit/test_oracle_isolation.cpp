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

// Links only the oracle library: the oracles must not depend on the solvers they check.
#include "irsdm/oracle.hpp"

#include <gtest/gtest.h>

using namespace irsdm;

TEST(OracleIsolation, ScalarAmplitudeOfHandChannel)
{
    ChannelSet ch;
    ch.h_ab = ComplexVector::Ones(2) / std::sqrt(2.0);
    ch.h_ae = ch.h_ab;
    ch.h_ai = ComplexMatrix::Ones(1, 2);
    ch.h_ib = ComplexVector::Ones(1);
    ch.h_ie = ComplexVector::Ones(1);
    ch.g_ab = ch.g_ae = 1.0;
    ch.g_aib = ch.g_aie = 4.0;
    ComplexVector v = ComplexVector::Ones(2) / std::sqrt(2.0);
    ComplexVector theta(1);
    theta << Complex(0.0, 1.0);
    // direct 1, cascade sqrt(4) * j * sqrt(2)
    const Complex amp = oracle::scalar_amplitude(ch, Receiver::bob, theta, v, 1.0);
    EXPECT_NEAR(amp.real(), 1.0, 1e-14);
    EXPECT_NEAR(amp.imag(), 2.0 * std::sqrt(2.0), 1e-14);
}

TEST(OracleIsolation, NullBasisOfSingleRow)
{
    ComplexMatrix p(1, 3);
    p << 0, 0, 1;
    const ComplexMatrix n = oracle::null_space_basis(p);
    ASSERT_EQ(n.cols(), 2);
    EXPECT_LE(n.row(2).cwiseAbs().maxCoeff(), 1e-15);
}
