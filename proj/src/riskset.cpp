#include "threm/riskset.hpp"

#include <algorithm>

namespace threm {

RiskPools active_sets(const NetworkState& state, const HyperEvent& event) {
    PoolTracker tracker;
    for (std::size_t pos = 0; pos < state.history_size(); ++pos) {
        HyperEvent past;
        past.t = state.event_at(pos).t;
        past.sets = state.event_at(pos).sets;
        tracker.add_event(past);
    }
    tracker.add_event(event);
    return tracker.pools();
}

void PoolTracker::add_event(const HyperEvent& e) {
    for (int ti = 0; ti < kNodeTypeCount; ++ti) {
        auto type = static_cast<NodeType>(ti);
        auto& seen = seen_[ti];
        auto& pool = pools_.of(type);
        for (NodeId id : e.sets.of(type)) {
            if (id >= seen.size()) seen.resize(id + 1, false);
            if (!seen[id]) {
                seen[id] = true;
                pool.push_back(id);
            }
        }
    }
}

namespace {

constexpr int kDuplicateRetries = 8;

std::vector<NodeId> draw_set(const std::vector<NodeId>& pool, std::size_t size, Rng& rng) {
    std::vector<NodeId> out;
    out.reserve(size);
    auto idx = rng.sample_indices(static_cast<std::uint32_t>(pool.size()),
                                  static_cast<std::uint32_t>(size));
    for (auto i : idx) out.push_back(pool[i]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SampledControls sample_controls(const HyperEvent& event, const RiskPools& pools, std::uint32_t m,
                                Rng& rng) {
    for (int ti = 0; ti < kNodeTypeCount; ++ti) {
        auto type = static_cast<NodeType>(ti);
        if (pools.of(type).size() < event.sets.of(type).size())
            throw SamplingError(std::string("sample_controls: ") + node_type_name(type) +
                                " pool smaller than the case set");
    }
    SampledControls out;
    out.controls.reserve(m);
    for (std::uint32_t c = 0; c < m; ++c) {
        Candidate cand;
        bool duplicate = false;
        for (int attempt = 0;; ++attempt) {
            cand.authors = draw_set(pools.of(NodeType::Author), event.authors().size(), rng);
            cand.references =
                draw_set(pools.of(NodeType::Reference), event.references().size(), rng);
            cand.keywords = draw_set(pools.of(NodeType::Keyword), event.keywords().size(), rng);
            duplicate = cand == event.sets;
            if (!duplicate || attempt >= kDuplicateRetries) break;
        }
        if (duplicate) ++out.duplicate_flags;
        out.controls.push_back(std::move(cand));
    }
    return out;
}

}  // namespace threm
