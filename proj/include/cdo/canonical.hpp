#pragma once

#include "cdo/digest.hpp"
#include "cdo/entity.hpp"

#include <string>

namespace cdo {

// Canonical byte layout used for every digest the engine computes. This is an
// external contract: verifiers recompute these bytes independently.
//
//   - fields joined by the unit separator 0x1F, records closed by 0x1E
//   - map keys sorted lexicographically by byte value
//   - strings are raw UTF-8, integers decimal ASCII
//   - scalar values carry a one-char type tag (s i d b t) before their
//     canonical text
//   - each layout starts with a one-char record tag
//
// Entity:     E <id> <domain> <n-labels> (<lang> <text>)* <n-attrs> (<key> <tagged-value>)*
// Correlation: C <id> <kind> <a> <b> <n-attrs> (<key> <tagged-value>)*
// Mapping:    M <id> <concept> <object> <kind> <vocabulary>
// Hierarchy node: H <child> <n-parents> (<parent>)*   (parents sorted)
// Role table: T <n-roles> (<name> <n-grants> (<domain> <op>)*)*
//               <n-actors> (<id> <n-roles> (<role>)*)*   (all sorted)
//
// Event record pre-hash (excludes event_entity, feeds its id):
//   P <seq> <actor> <action> <subject> <prev-state-hex> <final-state-hex>
//     <timestamp> <prev-hash-hex> <payload-json>
// Event record hash input:
//   R <seq> <event_entity> <actor> <action> <subject> <prev-state-hex>
//     <final-state-hex> <timestamp> <prev-hash-hex> <payload-json>

inline constexpr char kFieldSep = '\x1f';
inline constexpr char kRecordSep = '\x1e';

std::string canonical_entity_bytes(const Entity& e);
std::string canonical_correlation_bytes(const Correlation& c);

Digest entity_digest(const Entity& e);
Digest correlation_digest(const Correlation& c);

// Low-level builder shared by the layouts above.
class CanonicalWriter {
public:
    void field(std::string_view v) {
        buf_.append(v);
        buf_.push_back(kFieldSep);
    }
    void field(std::int64_t v) { field(std::to_string(v)); }
    void scalar(const Scalar& s) {
        buf_.push_back(s.type_tag());
        buf_.append(s.canonical_text());
        buf_.push_back(kFieldSep);
    }
    void end_record() { buf_.push_back(kRecordSep); }

    const std::string& bytes() const { return buf_; }
    std::string take() { return std::move(buf_); }

private:
    std::string buf_;
};

} // namespace cdo
