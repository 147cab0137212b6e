// SPDX-License-Identifier: Apache-2.0
//
// pass-sim: amplitude-tunable pinching-antenna system simulator
// Copyright (C) 2026 The pass-sim Authors
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

#ifndef PASS_VALIDATION_HPP
#define PASS_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pass
{

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Physics, array, precoder and GA invariants on randomized inputs.
std::vector<CheckResult> run_property_suite(std::uint64_t seed);

/// Table comparing RK4 integration of the coupled-mode equations with the closed forms.
std::string oracle_report(int steps = 10000);

} // namespace pass

#endif
