// Copyright 2026 The paulipart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "json.hpp"
#include "paulipart/report.hpp"

namespace paulipart {

/// Report fields in a fixed key order. `gamma` is written for convenience and
/// ignored on reading.
nlohmann::ordered_json report_to_json(const PartitionReport &report);

/// Throws ParseError when a field is missing or has the wrong type.
PartitionReport report_from_json(const nlohmann::json &doc);

}  // namespace paulipart
