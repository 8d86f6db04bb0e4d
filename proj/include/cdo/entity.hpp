#pragma once

#include "cdo/domain.hpp"
#include "cdo/id.hpp"
#include "cdo/scalar.hpp"

#include <map>
#include <string>

#include <json.hpp>

namespace cdo {

using LabelMap = std::map<std::string, std::string>; // language tag -> display text
using AttrMap = std::map<std::string, Scalar>;       // attribute key -> scalar

// Reserved attribute keys. Receipts and anchors live on ordinary entities so
// they stay queryable through the pattern engine.
namespace attr_keys {
inline constexpr const char* kAnchor = "cdo.anchor";
inline constexpr const char* kVocab = "cdo.vocab";
inline constexpr const char* kConsentSubject = "cdo.subject";
inline constexpr const char* kConsentPurpose = "cdo.purpose";
inline constexpr const char* kConsentScope = "cdo.scope";
inline constexpr const char* kConsentStatus = "cdo.status";
inline constexpr const char* kConsentGrantedAt = "cdo.granted_at";
inline constexpr const char* kConsentRevokedAt = "cdo.revoked_at";
inline constexpr const char* kEventSeq = "cdo.seq";
inline constexpr const char* kEventActor = "cdo.actor";
inline constexpr const char* kEventAction = "cdo.action";
inline constexpr const char* kEventSubject = "cdo.subject";
inline constexpr const char* kEventTimestamp = "cdo.ts";
} // namespace attr_keys

struct Entity {
    EntityId id;
    Domain domain = Domain::Object;
    LabelMap labels;
    AttrMap attributes;

    bool operator==(const Entity&) const = default;
};

// Undirected edge between two entities of distinct domains. Endpoints are
// stored normalized: domain(a) sorts before domain(b) in the fixed order
// Object < Event < Concept < Action, so kind determines which side is which.
struct Correlation {
    EntityId id; // cor:<seq of the creating record>
    CorrelationKind kind = CorrelationKind::Scheme;
    EntityId a;
    EntityId b;
    AttrMap attributes;

    bool operator==(const Correlation&) const = default;
};

nlohmann::json entity_to_json(const Entity& e);
Entity entity_from_json(const nlohmann::json& j);

nlohmann::json correlation_to_json(const Correlation& c);
Correlation correlation_from_json(const nlohmann::json& j);

} // namespace cdo
