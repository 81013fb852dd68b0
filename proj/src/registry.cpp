#include "threm/registry.hpp"

namespace threm {

NodeRef NodeRegistry::intern(NodeType type, std::string_view label) {
    auto& map = ids_[idx(type)];
    auto it = map.find(std::string(label));
    if (it != map.end()) return NodeRef{it->second, type};
    auto& labels = labels_[idx(type)];
    NodeId id = static_cast<NodeId>(labels.size());
    labels.emplace_back(label);
    map.emplace(labels.back(), id);
    return NodeRef{id, type};
}

std::optional<NodeRef> NodeRegistry::find(NodeType type, std::string_view label) const {
    const auto& map = ids_[idx(type)];
    auto it = map.find(std::string(label));
    if (it == map.end()) return std::nullopt;
    return NodeRef{it->second, type};
}

const std::string& NodeRegistry::label(NodeRef ref) const {
    const auto& labels = labels_[idx(ref.type)];
    if (ref.id >= labels.size()) throw Error("unknown node id " + std::to_string(ref.id));
    return labels[ref.id];
}

}  // namespace threm
