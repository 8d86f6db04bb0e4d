#pragma once

#include "cdo/entity.hpp"
#include "cdo/time.hpp"

#include <optional>
#include <set>
#include <string>

#include <json.hpp>

namespace cdo {

enum class ConsentStatus { Granted, Revoked };

// A subject's grant (or later revocation) of a purpose over a set of
// entities. Receipts are materialized as Object-domain entities in the
// `consent:` namespace with reserved attribute keys, so they are queryable
// through the normal pattern engine; this struct is the typed view.
struct ConsentReceipt {
    EntityId receipt_id; // consent:<seq of the granting record>
    std::string subject;
    std::string purpose;
    std::set<EntityId> scope;
    ConsentStatus status = ConsentStatus::Granted;
    Timestamp granted_at = 0;
    std::optional<Timestamp> revoked_at;

    bool operator==(const ConsentReceipt&) const = default;
};

// Entity <-> receipt view. The entity is the stored form; parsing throws
// ParseError when reserved attributes are malformed.
Entity receipt_to_entity(const ConsentReceipt& r);
ConsentReceipt receipt_from_entity(const Entity& e);
bool is_receipt_entity(const Entity& e);

nlohmann::json receipt_to_json(const ConsentReceipt& r);
ConsentReceipt receipt_from_json(const nlohmann::json& j);

// One chain link: some logged event whose subject is the traced entity.
struct ProvenanceLink {
    std::uint64_t seq = 0;
    std::string actor;
    EntityId action;
    Digest previous_state;
    Digest final_state;
    Timestamp timestamp = 0;
};

struct ProvenanceChain {
    EntityId subject;
    std::vector<ProvenanceLink> links; // strictly increasing seq
    bool chain_valid = false;          // verify_chain result at read time
};

struct AuditEntry {
    EntityId entity;
    bool known = false;          // entity currently exists
    bool consent_granted = false;
    std::string consent_note;    // matched receipt or reason for denial
    std::size_t lineage_length = 0;
};

struct AuditReport {
    std::string purpose;
    Timestamp at = 0;
    std::vector<AuditEntry> entries;
    bool chain_valid = false;
    bool compliant = false; // every entity granted AND chain verifies

    nlohmann::json to_json() const;
};

} // namespace cdo
