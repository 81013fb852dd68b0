#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "threm/event.hpp"

namespace threm {

/// Sparse per-past-event overlap sizes (|I∩Iₘ|, |J∩Jₘ|, |W∩Wₘ|); only
/// positions with at least one non-zero component are stored, ascending.
struct OverlapEntry {
    std::uint32_t event_pos;
    std::uint32_t n_authors;
    std::uint32_t n_references;
    std::uint32_t n_keywords;
};
using OverlapProfile = std::vector<OverlapEntry>;

/// The network of past events: applied history, inverted node->positions
/// index, and pairwise joint-participation weights (all type combinations).
///
/// Writes (apply_event) are exclusive and leave the adjacency in an
/// append-only "dirty" form; freeze() consolidates it. Query methods filter
/// on t_m < t, so results never see same-or-later-timestamp events even when
/// those have already been applied. Concurrent read-only queries are safe on
/// a frozen state; a dirty state consolidates lazily and must be queried from
/// one thread only.
class NetworkState {
public:
    struct AppliedEvent {
        double t;
        NodeSets sets;
    };

    /// Appends e; increments the joint weight of every unordered pair of
    /// distinct nodes co-occurring in e. Errors when e.t < clock().
    void apply_event(const HyperEvent& e);
    void apply_event(double t, const NodeSets& sets);

    /// Consolidates pending adjacency appends (sort + merge duplicate
    /// neighbor entries). Idempotent; call before concurrent queries.
    void freeze(int n_threads = 0);

    /// Count of history events with t_m < t containing both u and v.
    std::uint64_t joint_weight(NodeRef u, NodeRef v, double t) const;

    /// Overlap sizes against every past event with t_m < t, via the inverted
    /// index (cost proportional to postings touched).
    OverlapProfile overlap_profile(const Candidate& candidate, double t) const;

    std::size_t history_size() const { return history_.size(); }
    const AppliedEvent& event_at(std::size_t pos) const { return history_[pos]; }
    double clock() const { return clock_; }
    bool empty() const { return history_.empty(); }

    /// Number of leading history events with t_m < t (history is
    /// non-decreasing in t).
    std::uint32_t events_before(double t) const;

    /// Nodes of a type that appear anywhere in the history (highest id + 1).
    std::uint32_t node_span(NodeType type) const {
        return node_span_[static_cast<std::size_t>(type)];
    }

    /// Sorted (neighbor id, weight) pairs for u within neighbor type nt,
    /// counting the whole history. Valid on a frozen state.
    const std::vector<std::pair<NodeId, std::uint32_t>>& neighbors(NodeRef u, NodeType nt) const;

    /// History positions containing the node, ascending.
    const std::vector<std::uint32_t>& postings(NodeRef u) const;

    /// Versioned binary snapshot (history only; indexes are rebuilt on load).
    void save(std::ostream& out) const;
    static NetworkState load(std::istream& in);

    /// Sum over all unordered dyads of the total joint weight. Used by the
    /// conservation check: each applied event adds C(|e|,2).
    std::uint64_t total_dyad_weight() const;

private:
    struct AdjSlot {
        std::vector<std::pair<NodeId, std::uint32_t>> items;  // sorted+merged up to sorted_len
        std::uint32_t sorted_len = 0;
    };

    static std::size_t idx(NodeType t) { return static_cast<std::size_t>(t); }
    void touch_node(NodeType type, NodeId id);
    void append_pair(NodeType tu, NodeId u, NodeType tv, NodeId v);
    static void consolidate(AdjSlot& slot);
    const AdjSlot* find_slot(NodeRef u, NodeType nt) const;
    std::uint64_t joint_weight_scan(NodeRef u, NodeRef v, std::uint32_t boundary) const;

    std::vector<AppliedEvent> history_;
    std::vector<double> times_;  // history_[i].t, for boundary binary search
    double clock_ = 0.0;
    std::array<std::uint32_t, kNodeTypeCount> node_span_{0, 0, 0};

    // postings_[type][id] -> ascending history positions
    std::array<std::vector<std::vector<std::uint32_t>>, kNodeTypeCount> postings_;
    // adj_[type][id][neighbor type] -> (neighbor, weight), consolidated on freeze
    std::array<std::vector<std::array<AdjSlot, kNodeTypeCount>>, kNodeTypeCount> adj_;
    // slots with unconsolidated appends, as (type, id, neighbor type)
    std::vector<std::array<std::uint32_t, 3>> dirty_;
};

}  // namespace threm
