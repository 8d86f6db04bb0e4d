#include "cdo/scalar.hpp"

#include "cdo/error.hpp"

#include <charconv>
#include <cstdio>

namespace cdo {

std::string_view Scalar::type_name() const {
    switch (value_.index()) {
        case 0: return "string";
        case 1: return "int";
        case 2: return "decimal";
        case 3: return "bool";
        default: return "timestamp";
    }
}

char Scalar::type_tag() const {
    switch (value_.index()) {
        case 0: return 's';
        case 1: return 'i';
        case 2: return 'd';
        case 3: return 'b';
        default: return 't';
    }
}

std::string Scalar::canonical_text() const {
    switch (value_.index()) {
        case 0:
            return std::get<std::string>(value_);
        case 1:
            return std::to_string(std::get<std::int64_t>(value_));
        case 2: {
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof(buf), std::get<double>(value_));
            return std::string(buf, res.ptr);
        }
        case 3:
            return std::get<bool>(value_) ? "true" : "false";
        default:
            return render_timestamp(std::get<TimestampValue>(value_).micros);
    }
}

Scalar Scalar::from_parts(std::string_view type_name, const std::string& text) {
    if (type_name == "string") return Scalar(text);
    if (type_name == "int") {
        std::int64_t v = 0;
        auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
            raise(ErrorCode::ParseError, "bad int scalar '" + text + "'");
        }
        return Scalar(v);
    }
    if (type_name == "decimal") {
        double v = 0;
        auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
            raise(ErrorCode::ParseError, "bad decimal scalar '" + text + "'");
        }
        return Scalar(v);
    }
    if (type_name == "bool") {
        if (text == "true") return Scalar(true);
        if (text == "false") return Scalar(false);
        raise(ErrorCode::ParseError, "bad bool scalar '" + text + "'");
    }
    if (type_name == "timestamp") {
        return Scalar::timestamp(parse_timestamp(text));
    }
    raise(ErrorCode::ParseError, "unknown scalar type '" + std::string(type_name) + "'");
}

nlohmann::json scalar_to_json(const Scalar& s) {
    return {{"type", std::string(s.type_name())}, {"value", s.canonical_text()}};
}

Scalar scalar_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type") || !j.contains("value") ||
        !j["type"].is_string() || !j["value"].is_string()) {
        raise(ErrorCode::ParseError, "bad scalar json");
    }
    return Scalar::from_parts(j["type"].get<std::string>(), j["value"].get<std::string>());
}

} // namespace cdo
