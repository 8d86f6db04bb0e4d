#include "cdo/id.hpp"

#include "cdo/error.hpp"

#include <array>
#include <cctype>

namespace cdo {

namespace {

bool valid_part_char(char c) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    switch (c) {
        case ':':
        case '<':
        case '>':
        case '"':
            return false;
        default:
            return true;
    }
}

bool valid_part(std::string_view part, bool allow_empty) {
    if (part.empty()) return allow_empty;
    for (char c : part) {
        if (!valid_part_char(c)) return false;
    }
    return true;
}

} // namespace

EntityId parse_entity_id(std::string_view text) {
    auto pos = text.find(':');
    if (pos == std::string_view::npos) {
        raise(ErrorCode::InvalidId, "missing ':' in '" + std::string(text) + "'");
    }
    EntityId id{std::string(text.substr(0, pos)), std::string(text.substr(pos + 1))};
    validate_entity_id(id);
    return id;
}

bool is_valid_entity_id(std::string_view text) {
    auto pos = text.find(':');
    if (pos == std::string_view::npos) return false;
    return valid_part(text.substr(0, pos), true) && valid_part(text.substr(pos + 1), false);
}

void validate_entity_id(const EntityId& id) {
    if (!valid_part(id.ns, true)) {
        raise(ErrorCode::InvalidId, "bad namespace in '" + id.render() + "'");
    }
    if (!valid_part(id.local, false)) {
        raise(ErrorCode::InvalidId, "bad local name in '" + id.render() + "'");
    }
}

bool is_reserved_namespace(std::string_view ns) {
    static constexpr std::array<std::string_view, 5> kReserved = {
        "evt", "cor", "map", "consent", "cdo-sys"};
    for (auto r : kReserved) {
        if (ns == r) return true;
    }
    return false;
}

} // namespace cdo
