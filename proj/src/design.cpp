#include "threm/design.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "threm/io_util.hpp"
#include "threm/network_state.hpp"
#include "threm/riskset.hpp"
#include "threm/rng.hpp"
#include "threm/statistics.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace threm {

DesignMatrix DesignMatrix::select_columns(const std::vector<std::string>& names) const {
    std::vector<std::size_t> cols;
    cols.reserve(names.size());
    for (const auto& name : names) {
        auto it = std::find(column_names.begin(), column_names.end(), name);
        if (it == column_names.end()) throw ConfigError("design has no column: " + name);
        cols.push_back(static_cast<std::size_t>(it - column_names.begin()));
    }
    DesignMatrix out;
    out.column_names = names;
    out.strata = strata;
    out.is_case = is_case;
    out.m = m;
    out.seed = seed;
    out.duplicate_controls = duplicate_controls;
    out.dropped_strata = dropped_strata;
    out.values.resize(n_rows() * names.size());
    for (std::size_t r = 0; r < n_rows(); ++r) {
        auto src = row(r);
        for (std::size_t c = 0; c < cols.size(); ++c)
            out.values[r * names.size() + c] = src[cols[c]];
    }
    return out;
}

DesignMatrix build_design_matrix(const EventSequence& seq, const EffectCatalog& catalog,
                                 std::uint32_t m, std::uint64_t seed, int n_threads) {
    if (m == 0) throw ConfigError("build_design_matrix: m must be >= 1");
    validate_sequence(seq);

    DesignMatrix dm;
    dm.column_names = catalog.names();
    dm.m = m;
    dm.seed = seed;
    const std::size_t k = catalog.size();

#ifdef _OPENMP
    const int workers = n_threads > 0 ? n_threads : omp_get_max_threads();
#else
    const int workers = 1;
#endif

    NetworkState state;
    PoolTracker tracker;

    struct RowTask {
        Candidate cand;
        double t;
        std::size_t row;
    };
    std::vector<RowTask> tasks;
    std::vector<StatisticEngine> engines;
    engines.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) engines.emplace_back(state, catalog);

    const auto& events = seq.events;
    std::size_t i = 0;
    while (i < events.size()) {
        std::size_t j = i;
        while (j < events.size() && events[j].t == events[i].t) ++j;

        // sequential per-event sampling; statistics only see t_m < t, so rows
        // match the per-event apply pipeline exactly
        tasks.clear();
        for (std::size_t e = i; e < j; ++e) {
            const auto& ev = events[e];
            tracker.add_event(ev);
            Rng rng(mix_seed(seed, ev.seq));
            SampledControls sampled;
            bool case_only = false;
            try {
                sampled = sample_controls(ev, tracker.pools(), m, rng);
            } catch (const SamplingError&) {
                case_only = true;  // emitted case-only; the estimator drops it
            }
            dm.duplicate_controls += sampled.duplicate_flags;
            if (case_only) ++dm.dropped_strata;

            DesignMatrix::Stratum st;
            st.event_seq = ev.seq;
            st.t = ev.t;
            st.first_row = static_cast<std::uint32_t>(dm.is_case.size());
            st.n_rows = static_cast<std::uint32_t>(1 + sampled.controls.size());
            dm.strata.push_back(st);

            tasks.push_back(RowTask{ev.sets, ev.t, dm.is_case.size()});
            dm.is_case.push_back(1);
            for (auto& ctl : sampled.controls) {
                tasks.push_back(RowTask{std::move(ctl), ev.t, dm.is_case.size()});
                dm.is_case.push_back(0);
            }
        }
        dm.values.resize(dm.is_case.size() * k);

        const auto n_tasks = static_cast<std::int64_t>(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
#endif
        for (std::int64_t ti = 0; ti < n_tasks; ++ti) {
#ifdef _OPENMP
            auto& engine = engines[static_cast<std::size_t>(omp_get_thread_num())];
#else
            auto& engine = engines[0];
#endif
            const auto& task = tasks[static_cast<std::size_t>(ti)];
            engine.compute(task.cand, task.t, std::span<double>(dm.values.data() + task.row * k, k));
        }

        for (std::size_t e = i; e < j; ++e) state.apply_event(events[e]);
        state.freeze(workers);
        i = j;
    }
    return dm;
}

void write_design_csv(const DesignMatrix& dm, std::ostream& out) {
    std::string line = "stratum,is_case";
    for (const auto& name : dm.column_names) {
        line += ',';
        line += name;
    }
    line += '\n';
    out << line;
    const std::size_t k = dm.n_cols();
    for (const auto& st : dm.strata) {
        for (std::uint32_t r = st.first_row; r < st.first_row + st.n_rows; ++r) {
            line.clear();
            line += std::to_string(st.event_seq);
            line += ',';
            line += dm.is_case[r] ? '1' : '0';
            for (std::size_t c = 0; c < k; ++c) {
                line += ',';
                line += fmt_double(dm.values[r * k + c]);
            }
            line += '\n';
            out << line;
        }
    }
}

std::string design_meta_json(const DesignMatrix& dm) {
    nlohmann::json j;
    j["m"] = dm.m;
    j["seed"] = dm.seed;
    j["effects"] = dm.column_names;
    j["n_strata"] = dm.strata.size();
    j["n_rows"] = dm.n_rows();
    j["dropped_strata"] = dm.dropped_strata;
    j["duplicate_controls"] = dm.duplicate_controls;
    return j.dump(2) + "\n";
}

DesignMatrix read_design_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("design csv: empty file");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string field;
        while (std::getline(hs, field, ',')) header.push_back(field);
    }
    if (header.size() < 3 || header[0] != "stratum" || header[1] != "is_case")
        throw DataError("design csv: expected header stratum,is_case,<effects>");

    DesignMatrix dm;
    dm.column_names.assign(header.begin() + 2, header.end());
    const std::size_t k = dm.n_cols();

    std::size_t lineno = 1;
    bool have_stratum = false;
    std::uint64_t current = 0;
    std::unordered_set<std::uint64_t> seen_strata;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const char* p = line.data();
        const char* end = p + line.size();
        auto next_field = [&](double& out_val) {
            auto [q, ec] = std::from_chars(p, end, out_val);
            if (ec != std::errc())
                throw DataError("design csv line " + std::to_string(lineno) + ": bad number");
            p = q < end && *q == ',' ? q + 1 : q;
        };
        double stratum_val, case_val;
        next_field(stratum_val);
        next_field(case_val);
        auto stratum_id = static_cast<std::uint64_t>(stratum_val);
        if (!have_stratum || stratum_id != current) {
            if (!seen_strata.insert(stratum_id).second)
                throw DataError("design csv line " + std::to_string(lineno) +
                                ": stratum rows are not contiguous");
            dm.strata.push_back(DesignMatrix::Stratum{static_cast<std::uint32_t>(stratum_id), 0.0,
                                                      static_cast<std::uint32_t>(dm.n_rows()), 0});
            current = stratum_id;
            have_stratum = true;
        }
        dm.strata.back().n_rows += 1;
        dm.is_case.push_back(case_val != 0.0 ? 1 : 0);
        for (std::size_t c = 0; c < k; ++c) {
            double v;
            next_field(v);
            dm.values.push_back(v);
        }
    }
    for (const auto& st : dm.strata) {
        std::uint32_t cases = 0;
        for (std::uint32_t r = st.first_row; r < st.first_row + st.n_rows; ++r)
            cases += dm.is_case[r];
        if (cases != 1)
            throw DataError("design csv: stratum " + std::to_string(st.event_seq) +
                            " has " + std::to_string(cases) + " case rows");
        if (st.n_rows == 1) ++dm.dropped_strata;
    }
    return dm;
}

}  // namespace threm
