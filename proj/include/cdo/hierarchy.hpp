#pragma once

#include "cdo/id.hpp"

#include <map>
#include <set>
#include <vector>

namespace cdo {

// Broader-than DAG over Concept entities. An edge (parent, child) reads
// "parent is broader than child". Insertion refuses anything that would
// close a cycle, so the relation stays acyclic by construction.
class ConceptHierarchy {
public:
    // Throws CycleDetected. Endpoints become hierarchy nodes.
    void add_broader(const EntityId& parent, const EntityId& child);

    // Nodes may exist without edges (object anchors land here).
    void add_node(const EntityId& node) { nodes_.insert(node); }

    bool contains(const EntityId& node) const { return nodes_.count(node) > 0; }
    bool has_edge(const EntityId& parent, const EntityId& child) const;

    // True when `ancestor` reaches `node` through one or more broader edges.
    bool is_strict_ancestor(const EntityId& ancestor, const EntityId& node) const;

    // Inclusive descendant closure (the node itself included).
    std::set<EntityId> descendants(const EntityId& node) const;

    bool share_descendant(const EntityId& x, const EntityId& y) const;

    const std::set<std::pair<EntityId, EntityId>>& edges() const { return edges_; }
    const std::set<EntityId>& nodes() const { return nodes_; }
    std::vector<EntityId> parents_of(const EntityId& child) const;

    void remove_node(const EntityId& node);

    bool operator==(const ConceptHierarchy& other) const {
        return edges_ == other.edges_ && nodes_ == other.nodes_;
    }

private:
    std::set<std::pair<EntityId, EntityId>> edges_; // (parent, child)
    std::set<EntityId> nodes_;
    std::map<EntityId, std::set<EntityId>> children_; // parent -> children
    std::map<EntityId, std::set<EntityId>> parents_;  // child -> parents
};

} // namespace cdo
