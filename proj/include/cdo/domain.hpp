#pragma once

#include <optional>
#include <string_view>

namespace cdo {

// The four data domains. Enum order doubles as the canonical sort order used
// to normalize correlation endpoints: Object < Event < Concept < Action.
enum class Domain {
    Object = 0,
    Event = 1,
    Concept = 2,
    Action = 3,
};

// The six functional correlations, one per unordered pair of distinct domains.
enum class CorrelationKind {
    Scheme,  // Object + Concept
    Reason,  // Action + Event
    Cause,   // Action + Object
    Method,  // Action + Concept
    Goal,    // Concept + Event
    Effect,  // Object + Event
};

enum class CrossDomainClass {
    ConsensualScheme, // Scheme edges
    SovereignReason,  // Reason edges
    None,
};

std::string_view domain_name(Domain d);
std::optional<Domain> domain_from_name(std::string_view name);

std::string_view correlation_kind_name(CorrelationKind k);
std::optional<CorrelationKind> correlation_kind_from_name(std::string_view name);

std::string_view cross_domain_class_name(CrossDomainClass c);

// The Fig.-2 table. Symmetric in its arguments; SameDomainPair when d1 == d2.
CorrelationKind correlation_kind_for(Domain d1, Domain d2);

// The domain pair for a kind, in normalized order (first sorts before second).
std::pair<Domain, Domain> domain_pair_for(CorrelationKind k);

CrossDomainClass classify_cross_domain(CorrelationKind k);

constexpr Domain kAllDomains[] = {Domain::Object, Domain::Event, Domain::Concept,
                                  Domain::Action};
constexpr CorrelationKind kAllKinds[] = {CorrelationKind::Scheme, CorrelationKind::Reason,
                                         CorrelationKind::Cause,  CorrelationKind::Method,
                                         CorrelationKind::Goal,   CorrelationKind::Effect};

} // namespace cdo
