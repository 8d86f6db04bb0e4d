#pragma once

#include "cdo/digest.hpp"
#include "cdo/domain.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace cdo {

enum class OpClass { Read, Write, Append };

std::string_view op_class_name(OpClass op);
std::optional<OpClass> op_class_from_name(std::string_view name);

struct Permission {
    Domain domain = Domain::Object;
    OpClass op = OpClass::Read;

    auto operator<=>(const Permission&) const = default;
};

struct Role {
    std::string name;
    std::set<Permission> grants; // may be empty: a role that can do nothing
};

struct ActorInfo {
    std::string actor_id;
    std::set<std::string> roles;
    std::optional<Digest> key; // explicit HMAC key; absent = derived default
};

struct Decision {
    bool allowed = false;
    std::string reason; // matched grant, or "default-deny"
};

// Role and actor tables plus the pure decision function. Default deny: a
// request with no matching grant is refused, unknown actors included.
class RoleTable {
public:
    // Installs admin / event-notary / action-tracker, the root actor and the
    // cdo-system actor. This baseline is constant and never logged.
    static RoleTable with_builtins();

    const Role& define_role(const std::string& name, std::set<Permission> grants);
    void assign_roles(const std::string& actor_id, std::set<std::string> roles);

    Decision check(const std::string& actor_id, OpClass op, Domain domain) const;

    bool has_role(const std::string& name) const { return roles_.count(name) > 0; }
    bool has_actor(const std::string& actor_id) const { return actors_.count(actor_id) > 0; }
    const Role* find_role(const std::string& name) const;
    const ActorInfo* find_actor(const std::string& actor_id) const;

    const std::map<std::string, Role>& roles() const { return roles_; }
    const std::map<std::string, ActorInfo>& actors() const { return actors_; }

    void set_actor_key(const std::string& actor_id, const Digest& key);

    std::string canonical_bytes() const;

    nlohmann::json to_json() const;
    static RoleTable from_json(const nlohmann::json& j);

    bool operator==(const RoleTable& other) const;

private:
    std::map<std::string, Role> roles_;
    std::map<std::string, ActorInfo> actors_;
};

// Built-in identities.
inline constexpr const char* kRootActor = "root";
inline constexpr const char* kSystemActor = "cdo-system";
inline constexpr const char* kAdminRole = "admin";
inline constexpr const char* kEventNotaryRole = "event-notary";
inline constexpr const char* kActionTrackerRole = "action-tracker";

} // namespace cdo
