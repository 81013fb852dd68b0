#include "threm/network_state.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace threm {

namespace {
const std::vector<std::pair<NodeId, std::uint32_t>> kEmptyNeighbors;
const std::vector<std::uint32_t> kEmptyPostings;
constexpr char kSnapshotMagic[8] = {'T', 'H', 'R', 'E', 'M', 'N', 'S', '1'};
constexpr std::uint32_t kSnapshotVersion = 1;
}  // namespace

void NetworkState::touch_node(NodeType type, NodeId id) {
    auto& span = node_span_[idx(type)];
    if (id >= span) span = id + 1;
    auto& posts = postings_[idx(type)];
    if (posts.size() < span) posts.resize(span);
    auto& adj = adj_[idx(type)];
    if (adj.size() < span) adj.resize(span);
}

void NetworkState::append_pair(NodeType tu, NodeId u, NodeType tv, NodeId v) {
    AdjSlot& slot = adj_[idx(tu)][u][idx(tv)];
    if (slot.items.size() == slot.sorted_len)
        dirty_.push_back({static_cast<std::uint32_t>(tu), u, static_cast<std::uint32_t>(tv)});
    slot.items.emplace_back(v, 1u);
}

void NetworkState::apply_event(double t, const NodeSets& sets) {
    if (!history_.empty() && t < clock_)
        throw OrderingError("apply_event: timestamp " + std::to_string(t) +
                            " is before state clock " + std::to_string(clock_));

    const std::uint32_t pos = static_cast<std::uint32_t>(history_.size());
    // flat typed node list for the pairwise update
    std::vector<std::pair<NodeType, NodeId>> nodes;
    nodes.reserve(sets.total_size());
    for (int ti = 0; ti < kNodeTypeCount; ++ti) {
        auto type = static_cast<NodeType>(ti);
        for (NodeId id : sets.of(type)) {
            touch_node(type, id);
            postings_[ti][id].push_back(pos);
            nodes.emplace_back(type, id);
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            append_pair(nodes[i].first, nodes[i].second, nodes[j].first, nodes[j].second);
            append_pair(nodes[j].first, nodes[j].second, nodes[i].first, nodes[i].second);
        }

    history_.push_back(AppliedEvent{t, sets});
    times_.push_back(t);
    clock_ = t;
}

void NetworkState::apply_event(const HyperEvent& e) { apply_event(e.t, e.sets); }

void NetworkState::consolidate(AdjSlot& slot) {
    auto& v = slot.items;
    if (slot.sorted_len == v.size()) return;
    std::sort(v.begin() + slot.sorted_len, v.end());
    std::inplace_merge(v.begin(), v.begin() + slot.sorted_len, v.end());
    // merge duplicate neighbor ids, summing weights
    std::size_t w = 0;
    for (std::size_t r = 0; r < v.size();) {
        NodeId id = v[r].first;
        std::uint32_t sum = 0;
        while (r < v.size() && v[r].first == id) sum += v[r++].second;
        v[w++] = {id, sum};
    }
    v.resize(w);
    slot.sorted_len = static_cast<std::uint32_t>(v.size());
}

void NetworkState::freeze(int n_threads) {
    if (dirty_.empty()) return;
    std::sort(dirty_.begin(), dirty_.end());
    dirty_.erase(std::unique(dirty_.begin(), dirty_.end()), dirty_.end());
    const auto n = static_cast<std::int64_t>(dirty_.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(n_threads > 0 ? n_threads : omp_get_max_threads())
#endif
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& d = dirty_[static_cast<std::size_t>(i)];
        consolidate(adj_[d[0]][d[1]][d[2]]);
    }
    dirty_.clear();
}

const NetworkState::AdjSlot* NetworkState::find_slot(NodeRef u, NodeType nt) const {
    const auto& per_type = adj_[idx(u.type)];
    if (u.id >= per_type.size()) return nullptr;
    return &per_type[u.id][idx(nt)];
}

const std::vector<std::pair<NodeId, std::uint32_t>>& NetworkState::neighbors(NodeRef u,
                                                                             NodeType nt) const {
    if (!dirty_.empty()) const_cast<NetworkState*>(this)->freeze();
    const AdjSlot* slot = find_slot(u, nt);
    return slot ? slot->items : kEmptyNeighbors;
}

const std::vector<std::uint32_t>& NetworkState::postings(NodeRef u) const {
    const auto& per_type = postings_[idx(u.type)];
    if (u.id >= per_type.size()) return kEmptyPostings;
    return per_type[u.id];
}

std::uint32_t NetworkState::events_before(double t) const {
    auto it = std::lower_bound(times_.begin(), times_.end(), t);
    return static_cast<std::uint32_t>(it - times_.begin());
}

std::uint64_t NetworkState::joint_weight_scan(NodeRef u, NodeRef v,
                                              std::uint32_t boundary) const {
    const auto& pu = postings(u);
    const auto& pv = postings(v);
    std::uint64_t count = 0;
    auto iu = pu.begin(), iv = pv.begin();
    while (iu != pu.end() && iv != pv.end() && *iu < boundary && *iv < boundary) {
        if (*iu < *iv)
            ++iu;
        else if (*iv < *iu)
            ++iv;
        else {
            ++count;
            ++iu;
            ++iv;
        }
    }
    return count;
}

std::uint64_t NetworkState::joint_weight(NodeRef u, NodeRef v, double t) const {
    if (u == v) throw Error("joint_weight: u and v must be distinct");
    const std::uint32_t boundary = events_before(t);
    if (boundary == history_.size()) {
        // whole history is strictly in the past: consolidated counts apply
        const auto& nb = neighbors(u, v.type);
        auto it = std::lower_bound(nb.begin(), nb.end(), std::make_pair(v.id, 0u),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it != nb.end() && it->first == v.id) return it->second;
        return 0;
    }
    return joint_weight_scan(u, v, boundary);
}

OverlapProfile NetworkState::overlap_profile(const Candidate& candidate, double t) const {
    const std::uint32_t boundary = events_before(t);
    std::unordered_map<std::uint32_t, std::array<std::uint32_t, 3>> acc;
    for (int ti = 0; ti < kNodeTypeCount; ++ti) {
        auto type = static_cast<NodeType>(ti);
        for (NodeId id : candidate.of(type)) {
            for (std::uint32_t pos : postings(NodeRef{id, type})) {
                if (pos >= boundary) break;
                acc[pos][static_cast<std::size_t>(ti)] += 1;
            }
        }
    }
    OverlapProfile profile;
    profile.reserve(acc.size());
    for (const auto& [pos, counts] : acc)
        profile.push_back(OverlapEntry{pos, counts[0], counts[1], counts[2]});
    std::sort(profile.begin(), profile.end(),
              [](const OverlapEntry& a, const OverlapEntry& b) { return a.event_pos < b.event_pos; });
    return profile;
}

std::uint64_t NetworkState::total_dyad_weight() const {
    if (!dirty_.empty()) const_cast<NetworkState*>(this)->freeze();
    std::uint64_t sum = 0;
    for (int ti = 0; ti < kNodeTypeCount; ++ti)
        for (const auto& slots : adj_[ti])
            for (const auto& slot : slots)
                for (const auto& [id, w] : slot.items) sum += w;
    return sum / 2;  // stored in both directions
}

void NetworkState::save(std::ostream& out) const {
    out.write(kSnapshotMagic, sizeof kSnapshotMagic);
    auto put_u32 = [&](std::uint32_t v) { out.write(reinterpret_cast<const char*>(&v), 4); };
    auto put_u64 = [&](std::uint64_t v) { out.write(reinterpret_cast<const char*>(&v), 8); };
    put_u32(kSnapshotVersion);
    put_u64(history_.size());
    for (const auto& ev : history_) {
        out.write(reinterpret_cast<const char*>(&ev.t), sizeof ev.t);
        for (int ti = 0; ti < kNodeTypeCount; ++ti) {
            const auto& ids = ev.sets.of(static_cast<NodeType>(ti));
            put_u32(static_cast<std::uint32_t>(ids.size()));
            out.write(reinterpret_cast<const char*>(ids.data()),
                      static_cast<std::streamsize>(ids.size() * sizeof(NodeId)));
        }
    }
    if (!out) throw DataError("snapshot write failed");
}

NetworkState NetworkState::load(std::istream& in) {
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kSnapshotMagic, sizeof magic) != 0)
        throw DataError("snapshot: bad magic");
    auto get_u32 = [&]() {
        std::uint32_t v;
        in.read(reinterpret_cast<char*>(&v), 4);
        return v;
    };
    auto get_u64 = [&]() {
        std::uint64_t v;
        in.read(reinterpret_cast<char*>(&v), 8);
        return v;
    };
    std::uint32_t version = get_u32();
    if (version != kSnapshotVersion)
        throw DataError("snapshot: unsupported version " + std::to_string(version));
    std::uint64_t n = get_u64();
    NetworkState state;
    for (std::uint64_t i = 0; i < n; ++i) {
        double t;
        in.read(reinterpret_cast<char*>(&t), sizeof t);
        NodeSets sets;
        for (int ti = 0; ti < kNodeTypeCount; ++ti) {
            std::uint32_t len = get_u32();
            auto& ids = sets.of(static_cast<NodeType>(ti));
            ids.resize(len);
            in.read(reinterpret_cast<char*>(ids.data()),
                    static_cast<std::streamsize>(len * sizeof(NodeId)));
        }
        if (!in) throw DataError("snapshot: truncated");
        state.apply_event(t, sets);
    }
    state.freeze();
    return state;
}

}  // namespace threm
