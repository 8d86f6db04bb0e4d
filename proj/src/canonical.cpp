#include "cdo/canonical.hpp"

namespace cdo {

namespace {

void write_attrs(CanonicalWriter& w, const AttrMap& attrs) {
    w.field(static_cast<std::int64_t>(attrs.size()));
    for (const auto& [key, value] : attrs) { // std::map keeps keys sorted
        w.field(key);
        w.scalar(value);
    }
}

} // namespace

std::string canonical_entity_bytes(const Entity& e) {
    CanonicalWriter w;
    w.field("E");
    w.field(e.id.render());
    w.field(domain_name(e.domain));
    w.field(static_cast<std::int64_t>(e.labels.size()));
    for (const auto& [lang, text] : e.labels) {
        w.field(lang);
        w.field(text);
    }
    write_attrs(w, e.attributes);
    w.end_record();
    return w.take();
}

std::string canonical_correlation_bytes(const Correlation& c) {
    CanonicalWriter w;
    w.field("C");
    w.field(c.id.render());
    w.field(correlation_kind_name(c.kind));
    w.field(c.a.render());
    w.field(c.b.render());
    write_attrs(w, c.attributes);
    w.end_record();
    return w.take();
}

Digest entity_digest(const Entity& e) { return sha256(canonical_entity_bytes(e)); }

Digest correlation_digest(const Correlation& c) {
    return sha256(canonical_correlation_bytes(c));
}

} // namespace cdo
