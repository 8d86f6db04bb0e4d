#pragma once

#include "cdo/id.hpp"

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace cdo {

enum class MappingKind { Equivalent, Broader, Narrower, Partial };

std::string_view mapping_kind_name(MappingKind k);
std::optional<MappingKind> mapping_kind_from_name(std::string_view name);

// Concept -> Object alignment. At most one mapping per
// (concept, object, vocabulary) triple.
struct Mapping {
    EntityId id; // map:<seq of the creating record>
    EntityId concept;
    EntityId object;
    MappingKind kind = MappingKind::Equivalent;
    std::string vocabulary;

    bool operator==(const Mapping&) const = default;
};

nlohmann::json mapping_to_json(const Mapping& m);
Mapping mapping_from_json(const nlohmann::json& j);

std::string canonical_mapping_bytes(const Mapping& m);

} // namespace cdo
