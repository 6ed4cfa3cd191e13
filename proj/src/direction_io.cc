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

#include "asbell/direction_io.h"

#include <fstream>
#include <string>

#include <fmt/core.h>

#include "asbell/errors.h"
#include "asbell/inequality.h"

namespace asbell {

namespace {

using nlohmann::json;

MeasurementSet directions_from_json(const json &node, const std::string &path, int expected) {
    if (!node.is_array()) {
        throw SchemaError(path, "expected an array of [x, y, z] directions");
    }
    if (static_cast<int>(node.size()) != expected) {
        throw SchemaError(path, fmt::format("expected {} directions, got {}", expected, node.size()));
    }
    std::vector<BlochVector> dirs;
    for (std::size_t k = 0; k < node.size(); ++k) {
        const std::string here = path + "/" + std::to_string(k);
        const json &d = node[k];
        if (!d.is_array() || d.size() != 3) {
            throw SchemaError(here, "expected [x, y, z]");
        }
        for (std::size_t c = 0; c < 3; ++c) {
            if (!d[c].is_number()) {
                throw SchemaError(here + "/" + std::to_string(c), "expected a number");
            }
        }
        try {
            dirs.push_back(BlochVector::from_components(d[0].get<double>(), d[1].get<double>(), d[2].get<double>()));
        } catch (const InvalidDirectionError &e) {
            throw SchemaError(here, e.what());
        }
    }
    return MeasurementSet(std::move(dirs));
}

}  // namespace

json directions_to_json(const MeasurementSet &set) {
    json out = json::array();
    for (const auto &d : set) {
        out.push_back({d.x(), d.y(), d.z()});
    }
    return out;
}

json catalog_to_json(const DirectionCatalogEntry &entry) {
    json out;
    out["n"] = entry.n;
    out["bob"] = directions_to_json(entry.bob);
    out["alice"] = entry.alice ? directions_to_json(*entry.alice) : json(nullptr);
    out["notes"] = entry.provenance_notes;
    if (entry.canonical_bob) {
        out["canonical_bob"] = directions_to_json(*entry.canonical_bob);
    }
    return out;
}

DirectionCatalogEntry catalog_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw SchemaError("", "expected a JSON object");
    }
    if (!doc.contains("n")) {
        throw SchemaError("/n", "missing required key");
    }
    if (!doc["n"].is_number_integer()) {
        throw SchemaError("/n", "expected an integer");
    }
    const auto n64 = doc["n"].get<std::int64_t>();
    if (n64 < 2 || n64 > kMaxMatrixOrder || n64 % 2 != 0) {
        throw SchemaError("/n", fmt::format("number of settings N must be even and in [2, {}], got {}", kMaxMatrixOrder, n64));
    }
    DirectionCatalogEntry entry;
    entry.n = static_cast<int>(n64);
    if (!doc.contains("bob")) {
        throw SchemaError("/bob", "missing required key");
    }
    entry.bob = directions_from_json(doc["bob"], "/bob", entry.n);
    if (doc.contains("alice") && !doc["alice"].is_null()) {
        entry.alice = directions_from_json(doc["alice"], "/alice", entry.n);
    }
    if (doc.contains("canonical_bob") && !doc["canonical_bob"].is_null()) {
        entry.canonical_bob = directions_from_json(doc["canonical_bob"], "/canonical_bob", entry.n);
    }
    if (doc.contains("notes")) {
        if (!doc["notes"].is_string()) {
            throw SchemaError("/notes", "expected a string");
        }
        entry.provenance_notes = doc["notes"].get<std::string>();
    }
    return entry;
}

DirectionCatalogEntry load_direction_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("", "cannot open direction file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw SchemaError("", std::string("malformed JSON in ") + path.string() + ": " + e.what());
    }
    return catalog_from_json(doc);
}

}  // namespace asbell
