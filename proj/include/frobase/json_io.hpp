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

#include <string>

#include <json.hpp>

#include "frobase/center.hpp"
#include "frobase/covering.hpp"
#include "frobase/radon.hpp"

namespace frobase {

using Json = nlohmann::json;

// Complex numbers are serialized as [re, im] pairs; matrices row-major; every
// file carries its point ordering explicitly through the base space lists.

Json to_json(const BaseSpace& space);
BaseSpace base_space_from_json(const Json& j);

Json to_json(const CFunction& f);
CFunction cfunction_from_json(const Json& j);

Json to_json(const HilbertBundle& bundle);
HilbertBundle bundle_from_json(const Json& j);

Json to_json(const BundleMorphism& morphism);
/// Blocks only; endpoints are supplied by the caller.
BundleMorphism morphism_from_json(const Json& j, const HilbertBundle& source,
                                  const HilbertBundle& target);

Json to_json(const FrobeniusStructure& f);
FrobeniusStructure frobenius_from_json(const Json& j);

Json to_json(const Covering& p);
Covering covering_from_json(const Json& j);

Json to_json(const StochasticKernel& k);
StochasticKernel kernel_from_json(const Json& j);

Json to_json(const ConditionalExpectation& ce);
ConditionalExpectation expectation_from_json(const Json& j);

Json law_report_to_json(const LawReport& report);

/// Parses a JSON document, wrapping parse failures in InputError with a
/// pointer to the offending location.
Json parse_json(const std::string& text);

}  // namespace frobase
