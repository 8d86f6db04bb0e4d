#include "cdo/domain.hpp"

#include "cdo/error.hpp"

namespace cdo {

std::string_view domain_name(Domain d) {
    switch (d) {
        case Domain::Object: return "object";
        case Domain::Event: return "event";
        case Domain::Concept: return "concept";
        case Domain::Action: return "action";
    }
    return "?";
}

std::optional<Domain> domain_from_name(std::string_view name) {
    if (name == "object" || name == "Object") return Domain::Object;
    if (name == "event" || name == "Event") return Domain::Event;
    if (name == "concept" || name == "Concept") return Domain::Concept;
    if (name == "action" || name == "Action") return Domain::Action;
    return std::nullopt;
}

std::string_view correlation_kind_name(CorrelationKind k) {
    switch (k) {
        case CorrelationKind::Scheme: return "scheme";
        case CorrelationKind::Reason: return "reason";
        case CorrelationKind::Cause: return "cause";
        case CorrelationKind::Method: return "method";
        case CorrelationKind::Goal: return "goal";
        case CorrelationKind::Effect: return "effect";
    }
    return "?";
}

std::optional<CorrelationKind> correlation_kind_from_name(std::string_view name) {
    if (name == "scheme" || name == "Scheme") return CorrelationKind::Scheme;
    if (name == "reason" || name == "Reason") return CorrelationKind::Reason;
    if (name == "cause" || name == "Cause") return CorrelationKind::Cause;
    if (name == "method" || name == "Method") return CorrelationKind::Method;
    if (name == "goal" || name == "Goal") return CorrelationKind::Goal;
    if (name == "effect" || name == "Effect") return CorrelationKind::Effect;
    return std::nullopt;
}

std::string_view cross_domain_class_name(CrossDomainClass c) {
    switch (c) {
        case CrossDomainClass::ConsensualScheme: return "consensual-scheme";
        case CrossDomainClass::SovereignReason: return "sovereign-reason";
        case CrossDomainClass::None: return "none";
    }
    return "?";
}

CorrelationKind correlation_kind_for(Domain d1, Domain d2) {
    if (d1 == d2) {
        raise(ErrorCode::SameDomainPair,
              "no functional correlation within domain '" + std::string(domain_name(d1)) + "'");
    }
    Domain lo = d1, hi = d2;
    if (static_cast<int>(hi) < static_cast<int>(lo)) std::swap(lo, hi);

    switch (lo) {
        case Domain::Object:
            switch (hi) {
                case Domain::Event: return CorrelationKind::Effect;
                case Domain::Concept: return CorrelationKind::Scheme;
                case Domain::Action: return CorrelationKind::Cause;
                default: break;
            }
            break;
        case Domain::Event:
            switch (hi) {
                case Domain::Concept: return CorrelationKind::Goal;
                case Domain::Action: return CorrelationKind::Reason;
                default: break;
            }
            break;
        case Domain::Concept:
            return CorrelationKind::Method; // hi must be Action
        default:
            break;
    }
    raise(ErrorCode::SameDomainPair, "unreachable domain pair");
}

std::pair<Domain, Domain> domain_pair_for(CorrelationKind k) {
    switch (k) {
        case CorrelationKind::Scheme: return {Domain::Object, Domain::Concept};
        case CorrelationKind::Reason: return {Domain::Event, Domain::Action};
        case CorrelationKind::Cause: return {Domain::Object, Domain::Action};
        case CorrelationKind::Method: return {Domain::Concept, Domain::Action};
        case CorrelationKind::Goal: return {Domain::Event, Domain::Concept};
        case CorrelationKind::Effect: return {Domain::Object, Domain::Event};
    }
    return {Domain::Object, Domain::Concept};
}

CrossDomainClass classify_cross_domain(CorrelationKind k) {
    switch (k) {
        case CorrelationKind::Scheme: return CrossDomainClass::ConsensualScheme;
        case CorrelationKind::Reason: return CrossDomainClass::SovereignReason;
        default: return CrossDomainClass::None;
    }
}

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::InvalidId: return "InvalidId";
        case ErrorCode::UnknownEntity: return "UnknownEntity";
        case ErrorCode::SameDomainPair: return "SameDomainPair";
        case ErrorCode::WrongDomain: return "WrongDomain";
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::NoMatch: return "NoMatch";
        case ErrorCode::MissingAnchor: return "MissingAnchor";
        case ErrorCode::DuplicateMapping: return "DuplicateMapping";
        case ErrorCode::NotMapped: return "NotMapped";
        case ErrorCode::ClockRegression: return "ClockRegression";
        case ErrorCode::Unauthorized: return "Unauthorized";
        case ErrorCode::UnknownActor: return "UnknownActor";
        case ErrorCode::CorruptLog: return "CorruptLog";
        case ErrorCode::DuplicateRole: return "DuplicateRole";
        case ErrorCode::UnknownRole: return "UnknownRole";
        case ErrorCode::InvalidPermission: return "InvalidPermission";
        case ErrorCode::UnknownReceipt: return "UnknownReceipt";
        case ErrorCode::AlreadyRevoked: return "AlreadyRevoked";
        case ErrorCode::EmptyScope: return "EmptyScope";
        case ErrorCode::NeverExisted: return "NeverExisted";
        case ErrorCode::DuplicateName: return "DuplicateName";
        case ErrorCode::UnboundedQuery: return "UnboundedQuery";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DomainConflict: return "DomainConflict";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::CorruptSnapshot: return "CorruptSnapshot";
    }
    return "Error";
}

} // namespace cdo
