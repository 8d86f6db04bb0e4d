#include "cdo/consent.hpp"

#include "cdo/error.hpp"

#include <sstream>

namespace cdo {

namespace {

std::string scope_to_text(const std::set<EntityId>& scope) {
    std::string out;
    for (const EntityId& id : scope) {
        if (!out.empty()) out.push_back(' ');
        out += id.render();
    }
    return out;
}

std::set<EntityId> scope_from_text(const std::string& text) {
    std::set<EntityId> scope;
    std::istringstream in(text);
    std::string token;
    while (in >> token) scope.insert(parse_entity_id(token));
    return scope;
}

} // namespace

Entity receipt_to_entity(const ConsentReceipt& r) {
    Entity e;
    e.id = r.receipt_id;
    e.domain = Domain::Object;
    e.attributes[attr_keys::kConsentSubject] = Scalar(r.subject);
    e.attributes[attr_keys::kConsentPurpose] = Scalar(r.purpose);
    e.attributes[attr_keys::kConsentScope] = Scalar(scope_to_text(r.scope));
    e.attributes[attr_keys::kConsentStatus] =
        Scalar(r.status == ConsentStatus::Granted ? "granted" : "revoked");
    e.attributes[attr_keys::kConsentGrantedAt] = Scalar::timestamp(r.granted_at);
    if (r.revoked_at) {
        e.attributes[attr_keys::kConsentRevokedAt] = Scalar::timestamp(*r.revoked_at);
    }
    return e;
}

ConsentReceipt receipt_from_entity(const Entity& e) {
    auto text = [&](const char* key) -> std::string {
        auto it = e.attributes.find(key);
        if (it == e.attributes.end()) {
            raise(ErrorCode::ParseError,
                  "receipt entity " + e.id.render() + " missing " + key);
        }
        return it->second.canonical_text();
    };
    ConsentReceipt r;
    r.receipt_id = e.id;
    r.subject = text(attr_keys::kConsentSubject);
    r.purpose = text(attr_keys::kConsentPurpose);
    r.scope = scope_from_text(text(attr_keys::kConsentScope));
    const std::string status = text(attr_keys::kConsentStatus);
    if (status == "granted") {
        r.status = ConsentStatus::Granted;
    } else if (status == "revoked") {
        r.status = ConsentStatus::Revoked;
    } else {
        raise(ErrorCode::ParseError, "bad consent status '" + status + "'");
    }
    r.granted_at = parse_timestamp(text(attr_keys::kConsentGrantedAt));
    if (e.attributes.count(attr_keys::kConsentRevokedAt)) {
        r.revoked_at = parse_timestamp(text(attr_keys::kConsentRevokedAt));
    }
    return r;
}

bool is_receipt_entity(const Entity& e) {
    return e.id.ns == "consent" && e.attributes.count(attr_keys::kConsentStatus) > 0;
}

nlohmann::json receipt_to_json(const ConsentReceipt& r) {
    nlohmann::json scope = nlohmann::json::array();
    for (const EntityId& id : r.scope) scope.push_back(id.render());
    nlohmann::json j = {{"id", r.receipt_id.render()},
                        {"subject", r.subject},
                        {"purpose", r.purpose},
                        {"scope", scope},
                        {"status", r.status == ConsentStatus::Granted ? "granted" : "revoked"},
                        {"granted_at", render_timestamp(r.granted_at)}};
    j["revoked_at"] = r.revoked_at ? nlohmann::json(render_timestamp(*r.revoked_at))
                                   : nlohmann::json(nullptr);
    return j;
}

ConsentReceipt receipt_from_json(const nlohmann::json& j) {
    ConsentReceipt r;
    r.receipt_id = parse_entity_id(j.at("id").get<std::string>());
    r.subject = j.at("subject").get<std::string>();
    r.purpose = j.at("purpose").get<std::string>();
    for (const auto& s : j.at("scope")) r.scope.insert(parse_entity_id(s.get<std::string>()));
    r.status = j.at("status").get<std::string>() == "granted" ? ConsentStatus::Granted
                                                              : ConsentStatus::Revoked;
    r.granted_at = parse_timestamp(j.at("granted_at").get<std::string>());
    if (j.contains("revoked_at") && !j["revoked_at"].is_null()) {
        r.revoked_at = parse_timestamp(j["revoked_at"].get<std::string>());
    }
    return r;
}

nlohmann::json AuditReport::to_json() const {
    nlohmann::json entries_json = nlohmann::json::array();
    for (const AuditEntry& e : entries) {
        entries_json.push_back({{"entity", e.entity.render()},
                                {"known", e.known},
                                {"consent_granted", e.consent_granted},
                                {"note", e.consent_note},
                                {"lineage_length", e.lineage_length}});
    }
    return {{"purpose", purpose},
            {"at", render_timestamp(at)},
            {"entries", entries_json},
            {"chain_valid", chain_valid},
            {"compliant", compliant}};
}

} // namespace cdo
