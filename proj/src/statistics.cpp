#include "threm/statistics.hpp"

#include <algorithm>
#include <cmath>

namespace threm {

double binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

StatisticEngine::StatisticEngine(const NetworkState& state, const EffectCatalog& catalog)
    : state_(state), catalog_(catalog) {}

void StatisticEngine::bind_candidate(const Candidate& candidate, double t) {
    cand_ = &candidate;
    t_ = t;
    boundary_ = state_.events_before(t);
    full_history_ = boundary_ == state_.history_size();
    profile_ready_ = false;
    tables_.clear();

    ++member_epoch_;
    for (int ti = 0; ti < kNodeTypeCount; ++ti) {
        auto type = static_cast<NodeType>(ti);
        auto& stamps = member_stamp_[ti];
        std::uint32_t need = state_.node_span(type);
        for (NodeId id : candidate.of(type)) need = std::max(need, id + 1);
        if (stamps.size() < need) stamps.resize(need, 0);
        for (NodeId id : candidate.of(type)) stamps[id] = member_epoch_;
    }
}

void StatisticEngine::build_overlap_profile() {
    if (profile_ready_) return;
    profile_ready_ = true;
    profile_.clear();
    if (ov_stamp_.size() < state_.history_size()) {
        ov_stamp_.resize(state_.history_size(), 0);
        ov_counts_.resize(state_.history_size());
    }
    ++ov_epoch_;
    ov_touched_.clear();
    for (int ti = 0; ti < kNodeTypeCount; ++ti) {
        auto type = static_cast<NodeType>(ti);
        for (NodeId id : cand_->of(type)) {
            for (std::uint32_t pos : state_.postings(NodeRef{id, type})) {
                if (pos >= boundary_) break;
                if (ov_stamp_[pos] != ov_epoch_) {
                    ov_stamp_[pos] = ov_epoch_;
                    ov_counts_[pos] = {0, 0, 0};
                    ov_touched_.push_back(pos);
                }
                ov_counts_[pos][static_cast<std::size_t>(ti)] += 1;
            }
        }
    }
    std::sort(ov_touched_.begin(), ov_touched_.end());
    profile_.reserve(ov_touched_.size());
    for (std::uint32_t pos : ov_touched_) {
        const auto& c = ov_counts_[pos];
        profile_.push_back(OverlapEntry{pos, c[0], c[1], c[2]});
    }
}

const std::vector<double>& StatisticEngine::factor_table(NodeType role, double param) {
    for (const auto& tb : tables_)
        if (tb.role == role && tb.param == param) return tb.f;
    tables_.push_back(FactorTable{role, param, {}});
    auto& f = tables_.back().f;
    const std::size_t n = cand_->of(role).size();
    f.resize(n + 1);
    f[0] = 0.0;
    const double base = 1.0 - std::exp(-param);
    for (std::size_t k = 1; k <= n; ++k)
        f[k] = (1.0 - std::pow(base, static_cast<double>(k))) * static_cast<double>(k);
    return f;
}

double StatisticEngine::eval_gwsr(const GwsrConfig& cfg) {
    const bool src = cfg.source_active();
    const bool tgt = cfg.target_active();
    const auto& X = cand_->of(cfg.source_role);
    const auto& Y = cand_->of(cfg.target_role);
    if ((src && X.empty()) || (tgt && Y.empty())) return 0.0;

    build_overlap_profile();
    const std::vector<double>* fs = src ? &factor_table(cfg.source_role, cfg.kappa) : nullptr;
    const std::vector<double>* ft = tgt ? &factor_table(cfg.target_role, cfg.lambda) : nullptr;
    const auto si = static_cast<std::size_t>(cfg.source_role);
    const auto ti = static_cast<std::size_t>(cfg.target_role);

    double sum = 0.0;
    for (const auto& e : profile_) {
        const std::uint32_t counts[3] = {e.n_authors, e.n_references, e.n_keywords};
        double term = 1.0;
        if (src) term *= (*fs)[counts[si]];
        if (tgt) term *= (*ft)[counts[ti]];
        sum += term;
    }
    double norm = std::exp((src ? cfg.kappa : 0.0) + (tgt ? cfg.lambda : 0.0));
    if (src) norm /= static_cast<double>(X.size());
    if (tgt) norm /= static_cast<double>(Y.size());
    return norm * sum;
}

void StatisticEngine::emit_neighbors(NodeType endpoint_type, const std::vector<NodeId>& nodes,
                                     NodeType inner, std::uint8_t side, GroupScratch& g) {
    const auto ii = static_cast<std::size_t>(inner);
    auto push = [&](NodeId v2, std::uint32_t w) {
        if (g.stamp[v2] != g.epoch) {
            g.stamp[v2] = g.epoch;
            g.head[v2] = -1;
            g.touched.push_back(v2);
        }
        entries_.push_back(GroupEntry{w, side, g.head[v2]});
        g.head[v2] = static_cast<std::int32_t>(entries_.size() - 1);
    };

    if (full_history_) {
        for (NodeId u : nodes)
            for (const auto& [v2, w] : state_.neighbors(NodeRef{u, endpoint_type}, inner))
                push(v2, w);
        return;
    }
    // filtered path: count co-occurrences per (u, v2) from postings below the boundary
    GroupScratch& nb = nbr_[ii];
    for (NodeId u : nodes) {
        ++nb.epoch;
        nb.touched.clear();
        for (std::uint32_t pos : state_.postings(NodeRef{u, endpoint_type})) {
            if (pos >= boundary_) break;
            for (NodeId v2 : state_.event_at(pos).sets.of(inner)) {
                if (endpoint_type == inner && v2 == u) continue;
                if (nb.stamp[v2] != nb.epoch) {
                    nb.stamp[v2] = nb.epoch;
                    nb.count[v2] = 0;
                    nb.touched.push_back(v2);
                }
                nb.count[v2] += 1;
            }
        }
        for (NodeId v2 : nb.touched) push(v2, nb.count[v2]);
    }
}

std::uint64_t StatisticEngine::pairmin_same() {
    auto& w = wl_;
    if (w.size() < 2) return 0;
    std::sort(w.begin(), w.end());
    std::uint64_t acc = 0;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        acc += static_cast<std::uint64_t>(w[i]) * static_cast<std::uint64_t>(n - 1 - i);
    return acc;
}

std::uint64_t StatisticEngine::pairmin_cross() {
    if (wl_.empty() || wr_.empty()) return 0;
    std::sort(wl_.begin(), wl_.end());
    std::sort(wr_.begin(), wr_.end());
    std::uint64_t acc = 0, running = 0;
    std::size_t i = 0;
    for (std::uint32_t b : wr_) {
        while (i < wl_.size() && wl_[i] <= b) running += wl_[i++];
        acc += running + static_cast<std::uint64_t>(b) * static_cast<std::uint64_t>(wl_.size() - i);
    }
    return acc;
}

double StatisticEngine::eval_closure(const ClosureSpec& spec) {
    if (spec.distinct_events) return eval_closure_strict(spec);
    const auto& L = cand_->of(spec.outer_left);
    const auto& R = cand_->of(spec.outer_right);
    const bool same = spec.outer_left == spec.outer_right;
    const double pairs = same ? binom(L.size(), 2)
                              : static_cast<double>(L.size()) * static_cast<double>(R.size());
    if (pairs == 0.0) return 0.0;

    const auto ii = static_cast<std::size_t>(spec.inner);
    GroupScratch& g = group_[ii];
    ++g.epoch;
    g.touched.clear();
    entries_.clear();
    emit_neighbors(spec.outer_left, L, spec.inner, 0, g);
    if (!same) emit_neighbors(spec.outer_right, R, spec.inner, 1, g);

    std::uint64_t acc = 0;
    for (NodeId v2 : g.touched) {
        if (is_candidate_member(spec.inner, v2)) continue;  // v2 outside the hyperedge
        wl_.clear();
        wr_.clear();
        for (std::int32_t e = g.head[v2]; e >= 0; e = entries_[static_cast<std::size_t>(e)].prev) {
            const auto& ge = entries_[static_cast<std::size_t>(e)];
            (ge.side == 0 ? wl_ : wr_).push_back(ge.weight);
        }
        acc += same ? pairmin_same() : pairmin_cross();
    }
    return static_cast<double>(acc) / pairs;
}

std::uint32_t StatisticEngine::triple_count(NodeRef a, NodeRef b, NodeRef c) const {
    const auto& pa = state_.postings(a);
    const auto& pb = state_.postings(b);
    const auto& pc = state_.postings(c);
    std::uint32_t count = 0;
    auto ia = pa.begin(), ib = pb.begin(), ic = pc.begin();
    while (ia != pa.end() && ib != pb.end() && ic != pc.end()) {
        std::uint32_t m = std::max({*ia, *ib, *ic});
        if (m >= boundary_) break;
        if (*ia == *ib && *ib == *ic) {
            ++count;
            ++ia;
            ++ib;
            ++ic;
            continue;
        }
        if (*ia < m) ++ia;
        if (ib != pb.end() && *ib < m) ++ib;
        if (ic != pc.end() && *ic < m) ++ic;
    }
    return count;
}

// Strict variant: an intermediary contributes only if its two legs can be
// witnessed by two distinct past events (w1 + w2 - triple > 1). Posting-scan
// based; intended for small instances.
double StatisticEngine::eval_closure_strict(const ClosureSpec& spec) {
    const auto& L = cand_->of(spec.outer_left);
    const auto& R = cand_->of(spec.outer_right);
    const bool same = spec.outer_left == spec.outer_right;
    const double pairs = same ? binom(L.size(), 2)
                              : static_cast<double>(L.size()) * static_cast<double>(R.size());
    if (pairs == 0.0) return 0.0;

    const auto ii = static_cast<std::size_t>(spec.inner);
    GroupScratch& nb = nbr_[ii];
    std::uint64_t acc = 0;
    auto pair_term = [&](NodeId v1, NodeId v3) {
        NodeRef r1{v1, spec.outer_left}, r3{v3, spec.outer_right};
        // distinct intermediaries seen with v1 before t
        ++nb.epoch;
        nb.touched.clear();
        for (std::uint32_t pos : state_.postings(r1)) {
            if (pos >= boundary_) break;
            for (NodeId v2 : state_.event_at(pos).sets.of(spec.inner)) {
                if (nb.stamp[v2] != nb.epoch) {
                    nb.stamp[v2] = nb.epoch;
                    nb.touched.push_back(v2);
                }
            }
        }
        for (NodeId v2 : nb.touched) {
            if (is_candidate_member(spec.inner, v2)) continue;
            NodeRef r2{v2, spec.inner};
            if (r2 == r1 || r2 == r3) continue;
            auto w1 = state_.joint_weight(r1, r2, t_);
            if (w1 == 0) continue;
            auto w2 = state_.joint_weight(r2, r3, t_);
            if (w2 == 0) continue;
            if (w1 + w2 - triple_count(r1, r2, r3) < 2) continue;
            acc += std::min(w1, w2);
        }
    };
    if (same) {
        for (std::size_t i = 0; i < L.size(); ++i)
            for (std::size_t j = i + 1; j < L.size(); ++j) pair_term(L[i], L[j]);
    } else {
        for (NodeId v1 : L)
            for (NodeId v3 : R) pair_term(v1, v3);
    }
    return static_cast<double>(acc) / pairs;
}

void StatisticEngine::compute(const Candidate& candidate, double t, std::span<double> out) {
    if (out.size() != catalog_.size())
        throw Error("compute: output size does not match catalog");
    bind_candidate(candidate, t);
    for (int ti = 0; ti < kNodeTypeCount; ++ti) {
        auto& g = group_[ti];
        auto& nb = nbr_[ti];
        std::uint32_t need = member_stamp_[ti].size();
        if (g.stamp.size() < need) {
            g.stamp.resize(need, 0);
            g.head.resize(need, -1);
        }
        if (nb.stamp.size() < need) {
            nb.stamp.resize(need, 0);
            nb.count.resize(need, 0);
        }
    }
    for (std::size_t i = 0; i < catalog_.size(); ++i) {
        const auto& def = catalog_[i];
        out[i] = def.kind == EffectKind::Gwsr ? eval_gwsr(def.gwsr) : eval_closure(def.closure);
    }
}

double StatisticEngine::compute_one(const Candidate& candidate, double t, const EffectDef& def) {
    double value;
    EffectCatalog one;
    one.effects.push_back(def);
    StatisticEngine tmp(state_, one);
    tmp.compute(candidate, t, std::span<double>(&value, 1));
    return value;
}

double gwsr(const NetworkState& state, const Candidate& candidate, double t,
            const GwsrConfig& cfg, bool* degenerate) {
    cfg.validate();
    if (degenerate) *degenerate = false;
    if ((cfg.source_active() && candidate.of(cfg.source_role).empty()) ||
        (cfg.target_active() && candidate.of(cfg.target_role).empty())) {
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    EffectCatalog one;
    EffectDef def;
    def.name = "gwsr";
    def.kind = EffectKind::Gwsr;
    def.gwsr = cfg;
    one.effects.push_back(def);
    StatisticEngine engine(state, one);
    double value;
    engine.compute(candidate, t, std::span<double>(&value, 1));
    return value;
}

double subset_repetition(const NetworkState& state, const Candidate& candidate, double t,
                         std::pair<NodeType, NodeType> roles, unsigned p, unsigned q) {
    const auto& X = candidate.of(roles.first);
    const auto& Y = candidate.of(roles.second);
    if (p == 0 || q == 0) throw ConfigError("subset_repetition: p and q must be positive");
    if (X.size() < p || Y.size() < q)
        throw ConfigError("subset_repetition: order exceeds candidate set size");
    const auto si = static_cast<std::size_t>(roles.first);
    const auto ti = static_cast<std::size_t>(roles.second);
    double sum = 0.0;
    for (const auto& e : state.overlap_profile(candidate, t)) {
        const std::uint32_t counts[3] = {e.n_authors, e.n_references, e.n_keywords};
        sum += binom(counts[si], p) * binom(counts[ti], q);
    }
    return sum / (binom(X.size(), p) * binom(Y.size(), q));
}

double closure(const NetworkState& state, const Candidate& candidate, double t,
               const ClosureSpec& spec) {
    EffectCatalog one;
    EffectDef def;
    def.name = "closure";
    def.kind = EffectKind::Closure;
    def.closure = spec;
    one.effects.push_back(def);
    StatisticEngine engine(state, one);
    double value;
    engine.compute(candidate, t, std::span<double>(&value, 1));
    return value;
}

std::vector<double> compute_effect_vector(const NetworkState& state, const Candidate& candidate,
                                          double t, const EffectCatalog& catalog) {
    StatisticEngine engine(state, catalog);
    std::vector<double> out(catalog.size());
    engine.compute(candidate, t, out);
    return out;
}

}  // namespace threm
