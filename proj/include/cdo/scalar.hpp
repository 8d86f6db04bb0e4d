#pragma once

#include "cdo/time.hpp"

#include <cstdint>
#include <string>
#include <variant>

#include <json.hpp>

namespace cdo {

// Attribute values are restricted to five scalar kinds so canonical hashing
// stays well defined. Timestamps are wrapped to keep them distinct from ints.
struct TimestampValue {
    Timestamp micros = 0;
    auto operator<=>(const TimestampValue&) const = default;
};

class Scalar {
public:
    using Storage = std::variant<std::string, std::int64_t, double, bool, TimestampValue>;

    Scalar() : value_(std::string{}) {}
    Scalar(std::string v) : value_(std::move(v)) {}
    Scalar(const char* v) : value_(std::string(v)) {}
    Scalar(std::int64_t v) : value_(v) {}
    Scalar(int v) : value_(static_cast<std::int64_t>(v)) {}
    Scalar(double v) : value_(v) {}
    Scalar(bool v) : value_(v) {}
    Scalar(TimestampValue v) : value_(v) {}

    static Scalar timestamp(Timestamp t) { return Scalar(TimestampValue{t}); }

    const Storage& raw() const { return value_; }

    // "string" | "int" | "decimal" | "bool" | "timestamp"
    std::string_view type_name() const;

    // Single-char tag used in the canonical byte layout: s i d b t.
    char type_tag() const;

    // Canonical textual form: strings verbatim, ints as decimal ASCII,
    // decimals via shortest round-trip formatting, bools true/false,
    // timestamps RFC 3339. parse(type_name, canonical_text) round-trips.
    std::string canonical_text() const;

    static Scalar from_parts(std::string_view type_name, const std::string& text);

    bool operator==(const Scalar& other) const { return value_ == other.value_; }
    bool operator<(const Scalar& other) const { return value_ < other.value_; }

private:
    Storage value_;
};

// JSON wire form: {"type": "...", "value": "<canonical text>"}; the value is
// always a string so serialization is byte-deterministic.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

} // namespace cdo
