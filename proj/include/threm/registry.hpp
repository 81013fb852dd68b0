#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "threm/types.hpp"

namespace threm {

/// Bijection label <-> dense id, kept separately per node type.
/// Ids are assigned 0,1,2,... in first-appearance order. Labels are
/// case-sensitive; callers are expected to trim whitespace before interning
/// (parse_event_stream does).
class NodeRegistry {
public:
    /// Returns the existing id for (type, label) or assigns the next one.
    NodeRef intern(NodeType type, std::string_view label);

    /// Lookup without inserting.
    std::optional<NodeRef> find(NodeType type, std::string_view label) const;

    const std::string& label(NodeRef ref) const;

    std::size_t count(NodeType type) const { return labels_[idx(type)].size(); }

private:
    static std::size_t idx(NodeType t) { return static_cast<std::size_t>(t); }

    std::array<std::vector<std::string>, kNodeTypeCount> labels_;
    std::array<std::unordered_map<std::string, NodeId>, kNodeTypeCount> ids_;
};

}  // namespace threm
