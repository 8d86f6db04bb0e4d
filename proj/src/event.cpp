#include "cdo/event.hpp"

#include "cdo/error.hpp"

namespace cdo {

bool EventRecord::operator==(const EventRecord& other) const {
    return seq == other.seq && event_entity == other.event_entity && actor == other.actor &&
           action == other.action && subject == other.subject &&
           previous_state == other.previous_state && final_state == other.final_state &&
           timestamp == other.timestamp && prev_hash == other.prev_hash &&
           record_hash == other.record_hash && auth_tag == other.auth_tag &&
           payload == other.payload;
}

std::string_view log_failure_name(LogFailure f) {
    switch (f) {
        case LogFailure::HashMismatch: return "hash-mismatch";
        case LogFailure::ChainBreak: return "chain-break";
        case LogFailure::AuthFailure: return "auth-failure";
        case LogFailure::SeqGap: return "seq-gap";
    }
    return "?";
}

std::string canonical_record_prehash_bytes(const EventRecord& r) {
    CanonicalWriter w;
    w.field("P");
    w.field(static_cast<std::int64_t>(r.seq));
    w.field(r.actor);
    w.field(r.action.render());
    w.field(r.subject.render());
    w.field(r.previous_state.hex());
    w.field(r.final_state.hex());
    w.field(render_timestamp(r.timestamp));
    w.field(r.prev_hash.hex());
    w.field(r.payload.dump());
    w.end_record();
    return w.take();
}

std::string canonical_record_bytes(const EventRecord& r) {
    CanonicalWriter w;
    w.field("R");
    w.field(static_cast<std::int64_t>(r.seq));
    w.field(r.event_entity.render());
    w.field(r.actor);
    w.field(r.action.render());
    w.field(r.subject.render());
    w.field(r.previous_state.hex());
    w.field(r.final_state.hex());
    w.field(render_timestamp(r.timestamp));
    w.field(r.prev_hash.hex());
    w.field(r.payload.dump());
    w.end_record();
    return w.take();
}

EntityId event_entity_id(std::uint64_t seq, const Digest& prehash) {
    return EntityId{"evt", std::to_string(seq) + "-" + prehash.hex().substr(0, 8)};
}

nlohmann::json record_to_json(const EventRecord& r) {
    return {{"seq", r.seq},
            {"event_entity", r.event_entity.render()},
            {"actor", r.actor},
            {"action", r.action.render()},
            {"subject", r.subject.render()},
            {"previous_state", r.previous_state.hex()},
            {"final_state", r.final_state.hex()},
            {"timestamp", render_timestamp(r.timestamp)},
            {"prev_hash", r.prev_hash.hex()},
            {"record_hash", r.record_hash.hex()},
            {"auth_tag", r.auth_tag.hex()},
            {"payload", r.payload}};
}

EventRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) raise(ErrorCode::ParseError, "event record must be a json object");
    EventRecord r;
    if (!j.at("seq").is_number_unsigned()) {
        raise(ErrorCode::ParseError, "event record seq must be unsigned");
    }
    r.seq = j.at("seq").get<std::uint64_t>();
    r.event_entity = parse_entity_id(j.at("event_entity").get<std::string>());
    r.actor = j.at("actor").get<std::string>();
    r.action = parse_entity_id(j.at("action").get<std::string>());
    r.subject = parse_entity_id(j.at("subject").get<std::string>());
    r.previous_state = Digest::from_hex(j.at("previous_state").get<std::string>());
    r.final_state = Digest::from_hex(j.at("final_state").get<std::string>());
    r.timestamp = parse_timestamp(j.at("timestamp").get<std::string>());
    r.prev_hash = Digest::from_hex(j.at("prev_hash").get<std::string>());
    r.record_hash = Digest::from_hex(j.at("record_hash").get<std::string>());
    r.auth_tag = Digest::from_hex(j.at("auth_tag").get<std::string>());
    r.payload = j.value("payload", nlohmann::json::object());
    return r;
}

Digest HmacSigner::tag(const std::string& actor, const Digest& record_hash) const {
    Digest key = key_for(actor);
    return hmac_sha256(std::string_view(reinterpret_cast<const char*>(key.bytes.data()),
                                        key.bytes.size()),
                       std::string_view(reinterpret_cast<const char*>(record_hash.bytes.data()),
                                        record_hash.bytes.size()));
}

bool HmacSigner::verify(const std::string& actor, const Digest& record_hash,
                        const Digest& tag_value) const {
    return tag(actor, record_hash) == tag_value;
}

void HmacSigner::register_key(const std::string& actor, const Digest& key) {
    keys_[actor] = key;
}

Digest HmacSigner::key_for(const std::string& actor) const {
    auto it = keys_.find(actor);
    if (it != keys_.end()) return it->second;
    return derive_key(actor);
}

Digest HmacSigner::derive_key(const std::string& actor) {
    return sha256("cdo-actor-key/v1|" + actor);
}

const EventRecord& EventLog::append(EventRecord r, const Signer& signer) {
    r.seq = records_.size();
    r.prev_hash = records_.empty() ? Digest{} : records_.back().record_hash;
    r.event_entity = event_entity_id(r.seq, sha256(canonical_record_prehash_bytes(r)));
    r.record_hash = sha256(canonical_record_bytes(r));
    r.auth_tag = signer.tag(r.actor, r.record_hash);
    records_.push_back(std::move(r));
    return records_.back();
}

VerificationReport EventLog::verify(const Signer& signer) const {
    Digest expected_prev; // zero for genesis
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const EventRecord& r = records_[i];
        auto fail = [&](LogFailure kind) {
            return VerificationReport{false, r.seq, kind};
        };
        if (r.seq != i) {
            return VerificationReport{false, static_cast<std::uint64_t>(i), LogFailure::SeqGap};
        }
        const Digest prehash = sha256(canonical_record_prehash_bytes(r));
        if (r.event_entity != event_entity_id(r.seq, prehash) ||
            sha256(canonical_record_bytes(r)) != r.record_hash) {
            return fail(LogFailure::HashMismatch);
        }
        if (r.prev_hash != expected_prev) return fail(LogFailure::ChainBreak);
        if (!signer.verify(r.actor, r.record_hash, r.auth_tag)) {
            return fail(LogFailure::AuthFailure);
        }
        expected_prev = r.record_hash;
    }
    return {};
}

} // namespace cdo
