#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace threm {

using NodeId = std::uint32_t;

enum class NodeType : std::uint8_t { Author = 0, Reference = 1, Keyword = 2 };

constexpr int kNodeTypeCount = 3;

inline const char* node_type_name(NodeType t) {
    switch (t) {
        case NodeType::Author: return "author";
        case NodeType::Reference: return "reference";
        case NodeType::Keyword: return "keyword";
    }
    return "?";
}

/// Typed node handle: dense id within its type plus the type tag.
struct NodeRef {
    NodeId id;
    NodeType type;

    friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct OrderingError : Error {
    using Error::Error;
};
struct SamplingError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};
struct DataError : Error {
    using Error::Error;
};

}  // namespace threm
