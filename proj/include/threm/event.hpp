#pragma once

#include <cstdint>
#include <vector>

#include "threm/registry.hpp"
#include "threm/types.hpp"

namespace threm {

/// The (I, J, W) triple of a publication event or of a candidate hyperedge.
/// Each set is a sorted, duplicate-free vector of dense node ids.
struct NodeSets {
    std::vector<NodeId> authors;
    std::vector<NodeId> references;
    std::vector<NodeId> keywords;

    const std::vector<NodeId>& of(NodeType t) const {
        switch (t) {
            case NodeType::Author: return authors;
            case NodeType::Reference: return references;
            default: return keywords;
        }
    }
    std::vector<NodeId>& of(NodeType t) {
        return const_cast<std::vector<NodeId>&>(static_cast<const NodeSets&>(*this).of(t));
    }

    std::size_t total_size() const { return authors.size() + references.size() + keywords.size(); }

    friend bool operator==(const NodeSets&, const NodeSets&) = default;
};

using Candidate = NodeSets;

struct HyperEvent {
    double t = 0.0;
    std::uint32_t seq = 0;  // input-order index
    NodeSets sets;

    const std::vector<NodeId>& authors() const { return sets.authors; }
    const std::vector<NodeId>& references() const { return sets.references; }
    const std::vector<NodeId>& keywords() const { return sets.keywords; }
};

struct EventSequence {
    std::vector<HyperEvent> events;
    NodeRegistry registry;
    std::uint64_t dedup_warnings = 0;  // duplicate nodes dropped within a set at parse time

    std::size_t size() const { return events.size(); }
    bool empty() const { return events.empty(); }
};

/// Sorts, dedups (counting drops) and validates one event's sets in place.
/// Throws ValidationError on an empty author set.
void canonicalize_event(HyperEvent& e, std::uint64_t& dedup_counter);

/// Checks the EventSequence ordering invariant (non-decreasing t, ties in seq order).
void validate_sequence(const EventSequence& seq);

}  // namespace threm
