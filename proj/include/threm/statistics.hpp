#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "threm/effects.hpp"
#include "threm/event.hpp"
#include "threm/network_state.hpp"

namespace threm {

/// Computes catalog effect vectors for candidate hyperedges against a frozen
/// NetworkState.
///
/// One instance owns reusable epoch-stamped scratch (sized by history length
/// and node spans), so it is cheap to call row after row but must not be
/// shared across threads; create one engine per worker. The state may grow
/// between compute calls (scratch re-sizes lazily); it must not be mutated
/// during a call.
///
/// All statistics are strict-past: only events with t_m < t contribute. When
/// the state contains events at or after t, the engine switches from the
/// consolidated joint-weight index to an on-the-fly posting scan, so results
/// are independent of any later-appended events.
class StatisticEngine {
public:
    StatisticEngine(const NetworkState& state, const EffectCatalog& catalog);

    /// Effect vector in catalog order. out.size() must equal catalog.size().
    void compute(const Candidate& candidate, double t, std::span<double> out);

    double compute_one(const Candidate& candidate, double t, const EffectDef& def);

private:
    struct GroupScratch {
        std::vector<std::uint32_t> stamp;
        std::vector<std::int32_t> head;
        std::vector<std::uint32_t> count;
        std::vector<NodeId> touched;
        std::uint32_t epoch = 0;
    };
    struct GroupEntry {
        std::uint32_t weight;
        std::uint8_t side;
        std::int32_t prev;
    };
    struct FactorTable {
        NodeType role;
        double param;
        std::vector<double> f;
    };

    void bind_candidate(const Candidate& candidate, double t);
    void build_overlap_profile();
    const std::vector<double>& factor_table(NodeType role, double param);
    double eval_gwsr(const GwsrConfig& cfg);
    double eval_closure(const ClosureSpec& spec);
    double eval_closure_strict(const ClosureSpec& spec);
    void emit_neighbors(NodeType endpoint_type, const std::vector<NodeId>& nodes,
                        NodeType inner, std::uint8_t side, GroupScratch& g);
    std::uint64_t pairmin_same();
    std::uint64_t pairmin_cross();
    std::uint32_t triple_count(NodeRef a, NodeRef b, NodeRef c) const;
    bool is_candidate_member(NodeType type, NodeId id) const {
        const auto& stamps = member_stamp_[static_cast<std::size_t>(type)];
        return id < stamps.size() && stamps[id] == member_epoch_;
    }

    const NetworkState& state_;
    const EffectCatalog& catalog_;

    // bound per candidate
    const Candidate* cand_ = nullptr;
    double t_ = 0.0;
    std::uint32_t boundary_ = 0;
    bool full_history_ = false;
    bool profile_ready_ = false;

    // overlap profile scratch, indexed by history position
    std::vector<std::uint32_t> ov_stamp_;
    std::vector<std::array<std::uint32_t, 3>> ov_counts_;
    std::vector<std::uint32_t> ov_touched_;
    std::uint32_t ov_epoch_ = 0;
    OverlapProfile profile_;

    // closure group-by scratch, per inner node type
    std::array<GroupScratch, kNodeTypeCount> group_;
    std::vector<GroupEntry> entries_;
    std::array<GroupScratch, kNodeTypeCount> nbr_;  // slow-path per-node counting

    std::array<std::vector<std::uint32_t>, kNodeTypeCount> member_stamp_;
    std::uint32_t member_epoch_ = 0;

    std::vector<FactorTable> tables_;
    std::vector<std::uint32_t> wl_, wr_;
    std::vector<std::uint64_t> prefix_;
};

/// Geometrically weighted subset repetition (two-sided or collapsed). A
/// negative kappa/lambda drops that side; both negative is a config error.
/// An empty candidate set on an active side yields 0 and sets *degenerate.
double gwsr(const NetworkState& state, const Candidate& candidate, double t,
            const GwsrConfig& cfg, bool* degenerate = nullptr);

/// Subset repetition of order (p, q) on the (source, target) projection.
/// Requires |X| >= p and |Y| >= q.
double subset_repetition(const NetworkState& state, const Candidate& candidate, double t,
                         std::pair<NodeType, NodeType> roles, unsigned p, unsigned q);

/// Two-path closure statistic for one endpoint/intermediary specification.
double closure(const NetworkState& state, const Candidate& candidate, double t,
               const ClosureSpec& spec);

/// All catalog effects, in catalog order.
std::vector<double> compute_effect_vector(const NetworkState& state, const Candidate& candidate,
                                          double t, const EffectCatalog& catalog);

/// C(n, k) as a double, 0 when n < k.
double binom(std::uint64_t n, std::uint64_t k);

}  // namespace threm
