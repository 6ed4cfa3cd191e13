// Copyright 2026 The asbell Authors
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

#ifndef ASBELL_DIRECTION_IO_H
#define ASBELL_DIRECTION_IO_H

#include <filesystem>

#include <nlohmann/json.hpp>

#include "asbell/catalog.h"

namespace asbell {

/// [[x, y, z], ...]
nlohmann::json directions_to_json(const MeasurementSet &set);

/// {"n", "bob": [[x,y,z],...], "alice": [[x,y,z],...] | null, "notes"},
/// plus "canonical_bob" when the entry carries one.
nlohmann::json catalog_to_json(const DirectionCatalogEntry &entry);

/// Inverse of catalog_to_json. "notes" and "canonical_bob" are optional and
/// unknown keys are ignored. Throws SchemaError naming the offending path.
DirectionCatalogEntry catalog_from_json(const nlohmann::json &doc);

/// Reads and parses a direction file. Unreadable or malformed JSON is
/// reported as a SchemaError at the root.
DirectionCatalogEntry load_direction_file(const std::filesystem::path &path);

}  // namespace asbell

#endif
