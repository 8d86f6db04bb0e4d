#pragma once

#include "cdo/canonical.hpp"
#include "cdo/digest.hpp"
#include "cdo/entity.hpp"
#include "cdo/time.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cdo {

// One state transformation. Append-only, hash-chained, actor-authenticated.
//
// INVARIANTS:
//   1. seq values are contiguous from 0.
//   2. record_hash = sha256(canonical record bytes); prev_hash of record i
//      equals record_hash of record i-1 (all-zero for the genesis record).
//   3. previous_state / final_state always present; the all-zero digest is
//      the creation/deletion sentinel.
//   4. auth_tag = HMAC-SHA-256(actor key, record_hash bytes).
//   5. event_entity is derived from the record pre-hash, so given identical
//      inputs the whole record is byte-identical across runs.
//
// The payload is the canonical JSON of the operation arguments; replay needs
// it (state digests are not invertible) and it is covered by record_hash.
struct EventRecord {
    std::uint64_t seq = 0;
    EntityId event_entity;
    std::string actor;
    EntityId action;
    EntityId subject;
    Digest previous_state;
    Digest final_state;
    Timestamp timestamp = 0;
    Digest prev_hash;
    Digest record_hash;
    Digest auth_tag;
    nlohmann::json payload = nlohmann::json::object();

    bool operator==(const EventRecord& other) const;
};

enum class LogFailure { HashMismatch, ChainBreak, AuthFailure, SeqGap };
std::string_view log_failure_name(LogFailure f);

struct VerificationReport {
    bool valid = true;
    std::optional<std::uint64_t> first_bad_seq;
    std::optional<LogFailure> failure_kind;
};

// Pre-hash feeds the event-entity id; it covers everything except the id
// itself and the two dependent digests.
std::string canonical_record_prehash_bytes(const EventRecord& r);
std::string canonical_record_bytes(const EventRecord& r);

EntityId event_entity_id(std::uint64_t seq, const Digest& prehash);

// JSON line form, exact field names; digests and tags lowercase hex.
nlohmann::json record_to_json(const EventRecord& r);
EventRecord record_from_json(const nlohmann::json& j);

// Tags records per actor. The HMAC implementation derives a deterministic
// default key per actor id; explicit keys can be registered over it. An
// asymmetric signer can replace this behind the same interface.
class Signer {
public:
    virtual ~Signer() = default;
    virtual Digest tag(const std::string& actor, const Digest& record_hash) const = 0;
    virtual bool verify(const std::string& actor, const Digest& record_hash,
                        const Digest& tag) const = 0;
};

class HmacSigner final : public Signer {
public:
    Digest tag(const std::string& actor, const Digest& record_hash) const override;
    bool verify(const std::string& actor, const Digest& record_hash,
                const Digest& tag) const override;

    void register_key(const std::string& actor, const Digest& key);
    Digest key_for(const std::string& actor) const;
    static Digest derive_key(const std::string& actor);

    const std::map<std::string, Digest>& explicit_keys() const { return keys_; }

private:
    std::map<std::string, Digest> keys_;
};

// The append-only chain. No operation mutates or removes a stored record.
class EventLog {
public:
    // Fills seq, event_entity, prev_hash, record_hash and auth_tag in place.
    const EventRecord& append(EventRecord partial, const Signer& signer);

    // Restores a persisted chain verbatim (load/replay paths).
    void restore(std::vector<EventRecord> records) { records_ = std::move(records); }

    VerificationReport verify(const Signer& signer) const;

    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }
    const EventRecord& at(std::size_t i) const { return records_.at(i); }
    const std::vector<EventRecord>& records() const { return records_; }

    Timestamp last_timestamp() const {
        return records_.empty() ? 0 : records_.back().timestamp;
    }
    // Digest of the last record (the snapshot manifest root); zero when empty.
    Digest root_digest() const {
        return records_.empty() ? Digest{} : records_.back().record_hash;
    }

private:
    std::vector<EventRecord> records_;
};

} // namespace cdo
