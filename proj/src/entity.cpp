#include "cdo/entity.hpp"

#include "cdo/error.hpp"

namespace cdo {

namespace {

nlohmann::json attrs_to_json(const AttrMap& attrs) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, value] : attrs) {
        j[key] = scalar_to_json(value);
    }
    return j;
}

AttrMap attrs_from_json(const nlohmann::json& j) {
    AttrMap attrs;
    if (j.is_null()) return attrs;
    if (!j.is_object()) raise(ErrorCode::ParseError, "attributes must be an object");
    for (const auto& [key, value] : j.items()) {
        attrs.emplace(key, scalar_from_json(value));
    }
    return attrs;
}

} // namespace

nlohmann::json entity_to_json(const Entity& e) {
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [lang, text] : e.labels) labels[lang] = text;
    return {{"id", e.id.render()},
            {"domain", std::string(domain_name(e.domain))},
            {"labels", labels},
            {"attrs", attrs_to_json(e.attributes)}};
}

Entity entity_from_json(const nlohmann::json& j) {
    if (!j.is_object()) raise(ErrorCode::ParseError, "entity must be a json object");
    Entity e;
    e.id = parse_entity_id(j.at("id").get<std::string>());
    auto d = domain_from_name(j.at("domain").get<std::string>());
    if (!d) raise(ErrorCode::ParseError, "unknown domain in entity json");
    e.domain = *d;
    if (j.contains("labels")) {
        for (const auto& [lang, text] : j["labels"].items()) {
            e.labels[lang] = text.get<std::string>();
        }
    }
    if (j.contains("attrs")) e.attributes = attrs_from_json(j["attrs"]);
    return e;
}

nlohmann::json correlation_to_json(const Correlation& c) {
    return {{"id", c.id.render()},
            {"kind", std::string(correlation_kind_name(c.kind))},
            {"a", c.a.render()},
            {"b", c.b.render()},
            {"attrs", attrs_to_json(c.attributes)}};
}

Correlation correlation_from_json(const nlohmann::json& j) {
    if (!j.is_object()) raise(ErrorCode::ParseError, "correlation must be a json object");
    Correlation c;
    c.id = parse_entity_id(j.at("id").get<std::string>());
    auto k = correlation_kind_from_name(j.at("kind").get<std::string>());
    if (!k) raise(ErrorCode::ParseError, "unknown correlation kind");
    c.kind = *k;
    c.a = parse_entity_id(j.at("a").get<std::string>());
    c.b = parse_entity_id(j.at("b").get<std::string>());
    if (j.contains("attrs")) c.attributes = attrs_from_json(j["attrs"]);
    return c;
}

} // namespace cdo
