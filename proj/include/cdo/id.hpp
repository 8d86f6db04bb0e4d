#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace cdo {

// Compact identifier `prefix:local_name`. The empty prefix is the default
// namespace, so `:apple` parses to {ns="", local="apple"}.
//
// local_name is non-empty and may not contain whitespace, ':', '<', '>' or '"'.
// The namespace obeys the same alphabet (it may be empty).
struct EntityId {
    std::string ns;
    std::string local;

    EntityId() = default;
    EntityId(std::string ns_, std::string local_)
        : ns(std::move(ns_)), local(std::move(local_)) {}

    std::string render() const { return ns + ":" + local; }

    auto operator<=>(const EntityId&) const = default;
};

// Throws InvalidId on malformed input. parse(render(id)) == id.
EntityId parse_entity_id(std::string_view text);

// True when `text` would parse cleanly.
bool is_valid_entity_id(std::string_view text);

// Validates components directly (used on construction paths that bypass parse).
void validate_entity_id(const EntityId& id);

// Namespaces the engine manages itself; create_entity refuses them.
bool is_reserved_namespace(std::string_view ns);

struct EntityIdHash {
    size_t operator()(const EntityId& id) const {
        return std::hash<std::string>{}(id.ns) * 31 ^ std::hash<std::string>{}(id.local);
    }
};

} // namespace cdo
