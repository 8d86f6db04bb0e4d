#include "cdo/hierarchy.hpp"

#include "cdo/error.hpp"

#include <deque>

namespace cdo {

void ConceptHierarchy::add_broader(const EntityId& parent, const EntityId& child) {
    if (parent == child) {
        raise(ErrorCode::CycleDetected, "self edge on " + parent.render());
    }
    // parent reachable from child would close a cycle
    if (is_strict_ancestor(child, parent)) {
        raise(ErrorCode::CycleDetected,
              parent.render() + " is already narrower than " + child.render());
    }
    edges_.insert({parent, child});
    nodes_.insert(parent);
    nodes_.insert(child);
    children_[parent].insert(child);
    parents_[child].insert(parent);
}

bool ConceptHierarchy::has_edge(const EntityId& parent, const EntityId& child) const {
    return edges_.count({parent, child}) > 0;
}

bool ConceptHierarchy::is_strict_ancestor(const EntityId& ancestor,
                                          const EntityId& node) const {
    if (ancestor == node) return false;
    std::deque<EntityId> frontier{ancestor};
    std::set<EntityId> seen{ancestor};
    while (!frontier.empty()) {
        EntityId current = frontier.front();
        frontier.pop_front();
        auto it = children_.find(current);
        if (it == children_.end()) continue;
        for (const EntityId& child : it->second) {
            if (child == node) return true;
            if (seen.insert(child).second) frontier.push_back(child);
        }
    }
    return false;
}

std::set<EntityId> ConceptHierarchy::descendants(const EntityId& node) const {
    std::set<EntityId> seen{node};
    std::deque<EntityId> frontier{node};
    while (!frontier.empty()) {
        EntityId current = frontier.front();
        frontier.pop_front();
        auto it = children_.find(current);
        if (it == children_.end()) continue;
        for (const EntityId& child : it->second) {
            if (seen.insert(child).second) frontier.push_back(child);
        }
    }
    return seen;
}

bool ConceptHierarchy::share_descendant(const EntityId& x, const EntityId& y) const {
    std::set<EntityId> dx = descendants(x);
    for (const EntityId& d : descendants(y)) {
        if (dx.count(d)) return true;
    }
    return false;
}

std::vector<EntityId> ConceptHierarchy::parents_of(const EntityId& child) const {
    auto it = parents_.find(child);
    if (it == parents_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

void ConceptHierarchy::remove_node(const EntityId& node) {
    nodes_.erase(node);
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->first == node || it->second == node) {
            children_[it->first].erase(it->second);
            parents_[it->second].erase(it->first);
            it = edges_.erase(it);
        } else {
            ++it;
        }
    }
    children_.erase(node);
    parents_.erase(node);
}

} // namespace cdo
