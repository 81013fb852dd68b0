#include "threm/event.hpp"

#include <algorithm>

namespace threm {

namespace {

void sort_dedup(std::vector<NodeId>& v, std::uint64_t& dropped) {
    std::sort(v.begin(), v.end());
    auto last = std::unique(v.begin(), v.end());
    dropped += static_cast<std::uint64_t>(v.end() - last);
    v.erase(last, v.end());
}

}  // namespace

void canonicalize_event(HyperEvent& e, std::uint64_t& dedup_counter) {
    sort_dedup(e.sets.authors, dedup_counter);
    sort_dedup(e.sets.references, dedup_counter);
    sort_dedup(e.sets.keywords, dedup_counter);
    if (e.sets.authors.empty())
        throw ValidationError("event " + std::to_string(e.seq) + ": empty author set");
}

void validate_sequence(const EventSequence& seq) {
    for (std::size_t i = 1; i < seq.events.size(); ++i) {
        const auto& a = seq.events[i - 1];
        const auto& b = seq.events[i];
        if (b.t < a.t)
            throw OrderingError("event " + std::to_string(b.seq) + ": timestamp decreases");
        if (b.t == a.t && b.seq < a.seq)
            throw OrderingError("event " + std::to_string(b.seq) + ": tie not in input order");
    }
}

}  // namespace threm
