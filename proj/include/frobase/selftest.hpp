// Copyright 2026 frobase developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>

namespace frobase {

/// Runs the seeded property suite across all modules and returns a
/// deterministic JSON report: byte-identical for identical (seed, sizes,
/// tolerance, version). `sizes` is "small" or "full".
std::string selftest_report(uint64_t seed, const std::string& sizes, double tol,
                            bool markdown = false);

/// Number of failed checks in a selftest report produced above.
int selftest_failures(const std::string& report_json);

const char* version_string();

}  // namespace frobase
