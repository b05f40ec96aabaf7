// Copyright 2026 The Multiunit Pricing Authors.
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
#include <optional>
#include <string>

#include "multiunit/instance.hpp"
#include "multiunit/oracle.hpp"

namespace multiunit {

// One parsed instance file.  Exactly one of the two members is set,
// selected by the file's "format" field: "multiunit-instance" for a
// weighted-demand problem with continuous marginals, "multiunit-discrete"
// for a finite type list.
struct InstanceFile {
  std::optional<ProblemInstance> continuous;
  std::optional<DiscreteInstance> discrete;
};

// Parses instance JSON.  Unknown keys anywhere are an error, as are
// missing or mistyped required keys.  Errors throw std::invalid_argument
// with a "line:col: message" prefix where the position is known.
InstanceFile parse_instance_text(const std::string& text);

// Reads and parses a file; the filename is prepended to error messages.
InstanceFile load_instance_file(const std::string& path);

// Serializers emit doubles with 17 significant digits, so parse ->
// serialize -> parse is the identity on the numeric content.
std::string serialize(const ProblemInstance& inst);
std::string serialize(const DiscreteInstance& inst);
std::string canonical_text(const InstanceFile& file);

// FNV-1a over the canonical serialization; stable fingerprint for reports.
uint64_t digest64(const std::string& text);

}  // namespace multiunit
