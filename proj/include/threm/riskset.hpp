#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "threm/event.hpp"
#include "threm/network_state.hpp"
#include "threm/rng.hpp"

namespace threm {

/// The nodes eligible to appear in an event at time t, per type, in
/// first-appearance order (the order is part of the sampling determinism
/// contract).
struct RiskPools {
    std::array<std::vector<NodeId>, kNodeTypeCount> pools;

    const std::vector<NodeId>& of(NodeType t) const {
        return pools[static_cast<std::size_t>(t)];
    }
    std::vector<NodeId>& of(NodeType t) { return pools[static_cast<std::size_t>(t)]; }
};

/// Nodes seen in the state's history plus the current event's nodes, so the
/// observed event is always inside its own risk set.
RiskPools active_sets(const NetworkState& state, const HyperEvent& event);

/// Incremental equivalent of active_sets for the chronological design pass:
/// add_event(e) extends the pools with e's unseen nodes (first-appearance
/// order), after which the pools equal active_sets over the prefix ending at
/// e.
class PoolTracker {
public:
    void add_event(const HyperEvent& e);
    const RiskPools& pools() const { return pools_; }

private:
    RiskPools pools_;
    std::array<std::vector<bool>, kNodeTypeCount> seen_;
};

struct SampledControls {
    std::vector<Candidate> controls;
    std::uint32_t duplicate_flags = 0;  // controls identical to the case kept after retries
};

/// m control triples size-matched to the event, drawn uniformly without
/// replacement within each type pool, independently across controls. A
/// control identical to the case is redrawn (up to a bounded number of
/// retries) and then accepted with a duplicate flag. Errors when a pool is
/// smaller than the required set size, naming the type.
SampledControls sample_controls(const HyperEvent& event, const RiskPools& pools, std::uint32_t m,
                                Rng& rng);

}  // namespace threm
