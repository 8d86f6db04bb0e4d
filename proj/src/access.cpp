#include "cdo/access.hpp"

#include "cdo/canonical.hpp"
#include "cdo/error.hpp"

namespace cdo {

std::string_view op_class_name(OpClass op) {
    switch (op) {
        case OpClass::Read: return "read";
        case OpClass::Write: return "write";
        case OpClass::Append: return "append";
    }
    return "?";
}

std::optional<OpClass> op_class_from_name(std::string_view name) {
    if (name == "read" || name == "Read") return OpClass::Read;
    if (name == "write" || name == "Write") return OpClass::Write;
    if (name == "append" || name == "Append") return OpClass::Append;
    return std::nullopt;
}

RoleTable RoleTable::with_builtins() {
    RoleTable t;
    std::set<Permission> admin;
    for (Domain d : kAllDomains) {
        admin.insert({d, OpClass::Read});
        admin.insert({d, OpClass::Write});
    }
    admin.insert({Domain::Event, OpClass::Append});
    t.define_role(kAdminRole, std::move(admin));
    t.define_role(kEventNotaryRole,
                  {{Domain::Event, OpClass::Append}, {Domain::Event, OpClass::Read}});
    t.define_role(kActionTrackerRole,
                  {{Domain::Action, OpClass::Read}, {Domain::Event, OpClass::Read}});
    t.assign_roles(kRootActor, {kAdminRole});
    t.assign_roles(kSystemActor, {});
    return t;
}

const Role& RoleTable::define_role(const std::string& name, std::set<Permission> grants) {
    if (roles_.count(name)) {
        raise(ErrorCode::DuplicateRole, "role '" + name + "' already defined");
    }
    for (const Permission& p : grants) {
        if (p.op == OpClass::Append && p.domain != Domain::Event) {
            raise(ErrorCode::InvalidPermission,
                  "append is only meaningful for the event domain");
        }
    }
    auto [it, _] = roles_.emplace(name, Role{name, std::move(grants)});
    return it->second;
}

void RoleTable::assign_roles(const std::string& actor_id, std::set<std::string> roles) {
    for (const auto& r : roles) {
        if (!roles_.count(r)) raise(ErrorCode::UnknownRole, "role '" + r + "' not defined");
    }
    auto it = actors_.find(actor_id);
    if (it == actors_.end()) {
        actors_.emplace(actor_id, ActorInfo{actor_id, std::move(roles), std::nullopt});
    } else {
        it->second.roles = std::move(roles);
    }
}

Decision RoleTable::check(const std::string& actor_id, OpClass op, Domain domain) const {
    auto it = actors_.find(actor_id);
    if (it != actors_.end()) {
        for (const auto& role_name : it->second.roles) {
            auto rit = roles_.find(role_name);
            if (rit == roles_.end()) continue;
            if (rit->second.grants.count({domain, op})) {
                return {true, "role '" + role_name + "' grants " +
                                  std::string(op_class_name(op)) + " on " +
                                  std::string(domain_name(domain))};
            }
        }
    }
    return {false, "default-deny"};
}

const Role* RoleTable::find_role(const std::string& name) const {
    auto it = roles_.find(name);
    return it == roles_.end() ? nullptr : &it->second;
}

const ActorInfo* RoleTable::find_actor(const std::string& actor_id) const {
    auto it = actors_.find(actor_id);
    return it == actors_.end() ? nullptr : &it->second;
}

void RoleTable::set_actor_key(const std::string& actor_id, const Digest& key) {
    auto it = actors_.find(actor_id);
    if (it == actors_.end()) {
        actors_.emplace(actor_id, ActorInfo{actor_id, {}, key});
    } else {
        it->second.key = key;
    }
}

std::string RoleTable::canonical_bytes() const {
    CanonicalWriter w;
    w.field("T");
    w.field(static_cast<std::int64_t>(roles_.size()));
    for (const auto& [name, role] : roles_) {
        w.field(name);
        w.field(static_cast<std::int64_t>(role.grants.size()));
        for (const Permission& p : role.grants) {
            w.field(domain_name(p.domain));
            w.field(op_class_name(p.op));
        }
    }
    w.field(static_cast<std::int64_t>(actors_.size()));
    for (const auto& [id, actor] : actors_) {
        w.field(id);
        w.field(static_cast<std::int64_t>(actor.roles.size()));
        for (const auto& r : actor.roles) w.field(r);
    }
    w.end_record();
    return w.take();
}

nlohmann::json RoleTable::to_json() const {
    nlohmann::json roles = nlohmann::json::array();
    for (const auto& [name, role] : roles_) {
        nlohmann::json grants = nlohmann::json::array();
        for (const Permission& p : role.grants) {
            grants.push_back({{"domain", std::string(domain_name(p.domain))},
                              {"op", std::string(op_class_name(p.op))}});
        }
        roles.push_back({{"name", name}, {"grants", grants}});
    }
    nlohmann::json actors = nlohmann::json::array();
    for (const auto& [id, actor] : actors_) {
        nlohmann::json a = {{"id", id}, {"roles", actor.roles}};
        if (actor.key) a["key"] = actor.key->hex();
        actors.push_back(a);
    }
    return {{"roles", roles}, {"actors", actors}};
}

RoleTable RoleTable::from_json(const nlohmann::json& j) {
    RoleTable t;
    if (!j.is_object()) raise(ErrorCode::ParseError, "roles file must be a json object");
    for (const auto& r : j.value("roles", nlohmann::json::array())) {
        std::set<Permission> grants;
        for (const auto& g : r.value("grants", nlohmann::json::array())) {
            auto d = domain_from_name(g.at("domain").get<std::string>());
            auto op = op_class_from_name(g.at("op").get<std::string>());
            if (!d || !op) raise(ErrorCode::ParseError, "bad grant in roles file");
            grants.insert({*d, *op});
        }
        t.define_role(r.at("name").get<std::string>(), std::move(grants));
    }
    for (const auto& a : j.value("actors", nlohmann::json::array())) {
        std::set<std::string> roles;
        for (const auto& r : a.value("roles", nlohmann::json::array())) {
            roles.insert(r.get<std::string>());
        }
        const std::string id = a.at("id").get<std::string>();
        t.assign_roles(id, std::move(roles));
        if (a.contains("key")) {
            t.set_actor_key(id, Digest::from_hex(a["key"].get<std::string>()));
        }
    }
    return t;
}

bool RoleTable::operator==(const RoleTable& other) const {
    if (actors_.size() != other.actors_.size() || roles_.size() != other.roles_.size()) {
        return false;
    }
    for (const auto& [name, role] : roles_) {
        const Role* o = other.find_role(name);
        if (!o || o->grants != role.grants) return false;
    }
    for (const auto& [id, actor] : actors_) {
        const ActorInfo* o = other.find_actor(id);
        if (!o || o->roles != actor.roles || o->key != actor.key) return false;
    }
    return true;
}

} // namespace cdo
