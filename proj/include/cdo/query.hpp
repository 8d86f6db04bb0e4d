#pragma once

#include "cdo/entity.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace cdo {

// A term is either a bound entity id or a variable (written "?name").
struct Term {
    bool is_var = false;
    EntityId id;
    std::string var;

    static Term entity(EntityId e) { return {false, std::move(e), {}}; }
    static Term variable(std::string name) { return {true, {}, std::move(name)}; }

    bool operator==(const Term&) const = default;
};

struct AttrFilter {
    std::string var;
    std::string key;
    Scalar value;

    bool operator==(const AttrFilter&) const = default;
};

// One triple pattern. Two shapes:
//   node pattern:  subject only (object absent) — scans entities;
//   edge pattern:  subject and object — scans correlations in their
//                  normalized (a, b) orientation, kind optionally fixed.
//
// A pattern must be constrained (a bound endpoint, a domain filter or a kind
// filter) unless `all` is set; in a conjunctive sequence, sharing a variable
// with an earlier pattern also counts.
struct Pattern {
    std::optional<Term> subject;
    std::optional<CorrelationKind> kind_filter;
    std::optional<Term> object;
    std::map<std::string, Domain> domain_filters;
    std::vector<AttrFilter> attr_filters;
    bool all = false;

    bool operator==(const Pattern&) const = default;
};

using Solution = std::map<std::string, EntityId>; // variable -> bound entity

// Distinct solutions in deterministic order (lexicographic by variable name,
// then rendered id).
struct BindingSet {
    std::vector<Solution> solutions;

    bool operator==(const BindingSet&) const = default;
    nlohmann::json to_json() const;
};

struct Subgraph {
    std::set<EntityId> entities;
    std::vector<Correlation> correlations;
};

struct CqExpectation {
    enum class Kind { Bindings, NonEmpty, Count };
    Kind kind = Kind::NonEmpty;
    BindingSet bindings; // Kind::Bindings
    std::size_t count = 0; // Kind::Count
};

struct CompetencyQuestion {
    std::string name;
    std::string prose;
    std::vector<Pattern> query;
    CqExpectation expected;
};

struct CqResult {
    std::string name;
    bool pass = false;
    BindingSet actual;
    std::string expected_text;
    std::vector<Solution> missing; // expected but absent
    std::vector<Solution> extra;   // present but unexpected
};

struct CqReport {
    std::vector<CqResult> results;
    bool overall_pass = true;

    nlohmann::json to_json() const;
};

nlohmann::json pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const nlohmann::json& j);

nlohmann::json cq_to_json(const CompetencyQuestion& cq);
CompetencyQuestion cq_from_json(const nlohmann::json& j);

// Text form used by the CLI: patterns separated by ';', each
//   <term> <kind|any> <term> [filters...]   or   <term> [filters...]
// with filters  domain(?v)=<domain>  attr(?v,<key>)=<value>  all
// and attribute values optionally tagged (s: i: d: b: t:), default string.
std::vector<Pattern> parse_pattern_expr(const std::string& text);

nlohmann::json solution_to_json(const Solution& s);
Solution solution_from_json(const nlohmann::json& j);

} // namespace cdo
