#include "cdo/mapping.hpp"

#include "cdo/canonical.hpp"
#include "cdo/error.hpp"

namespace cdo {

std::string_view mapping_kind_name(MappingKind k) {
    switch (k) {
        case MappingKind::Equivalent: return "equivalent";
        case MappingKind::Broader: return "broader";
        case MappingKind::Narrower: return "narrower";
        case MappingKind::Partial: return "partial";
    }
    return "?";
}

std::optional<MappingKind> mapping_kind_from_name(std::string_view name) {
    if (name == "equivalent" || name == "Equivalent") return MappingKind::Equivalent;
    if (name == "broader" || name == "Broader") return MappingKind::Broader;
    if (name == "narrower" || name == "Narrower") return MappingKind::Narrower;
    if (name == "partial" || name == "Partial") return MappingKind::Partial;
    return std::nullopt;
}

nlohmann::json mapping_to_json(const Mapping& m) {
    return {{"id", m.id.render()},
            {"concept", m.concept.render()},
            {"object", m.object.render()},
            {"kind", std::string(mapping_kind_name(m.kind))},
            {"vocabulary", m.vocabulary}};
}

Mapping mapping_from_json(const nlohmann::json& j) {
    if (!j.is_object()) raise(ErrorCode::ParseError, "mapping must be a json object");
    Mapping m;
    m.id = parse_entity_id(j.at("id").get<std::string>());
    m.concept = parse_entity_id(j.at("concept").get<std::string>());
    m.object = parse_entity_id(j.at("object").get<std::string>());
    auto k = mapping_kind_from_name(j.at("kind").get<std::string>());
    if (!k) raise(ErrorCode::ParseError, "unknown mapping kind");
    m.kind = *k;
    m.vocabulary = j.at("vocabulary").get<std::string>();
    return m;
}

std::string canonical_mapping_bytes(const Mapping& m) {
    CanonicalWriter w;
    w.field("M");
    w.field(m.id.render());
    w.field(m.concept.render());
    w.field(m.object.render());
    w.field(mapping_kind_name(m.kind));
    w.field(m.vocabulary);
    w.end_record();
    return w.take();
}

} // namespace cdo
