#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "threm/effects.hpp"
#include "threm/event.hpp"

namespace threm {

/// Stratified case/control rows: one stratum per observed event, each row an
/// effect vector plus a case flag. Rows of a stratum are contiguous, case
/// first.
struct DesignMatrix {
    struct Stratum {
        std::uint32_t event_seq;
        double t;
        std::uint32_t first_row;
        std::uint32_t n_rows;
    };

    std::vector<std::string> column_names;
    std::vector<Stratum> strata;
    std::vector<double> values;  // row-major
    std::vector<std::uint8_t> is_case;

    std::uint32_t m = 0;
    std::uint64_t seed = 0;
    std::uint64_t duplicate_controls = 0;
    std::uint32_t dropped_strata = 0;  // strata emitted case-only

    std::size_t n_cols() const { return column_names.size(); }
    std::size_t n_rows() const { return is_case.size(); }
    std::span<const double> row(std::size_t r) const {
        return {values.data() + r * n_cols(), n_cols()};
    }

    /// Column-subset copy (selected names, preserving given order).
    DesignMatrix select_columns(const std::vector<std::string>& names) const;
};

/// Single chronological pass: per event, pools from the history so far plus
/// the event, m sampled controls, effect vectors for all rows against the
/// pre-event state, then the event is applied. Deterministic for fixed
/// (seq, catalog, m, seed) regardless of n_threads (0 = all cores).
DesignMatrix build_design_matrix(const EventSequence& seq, const EffectCatalog& catalog,
                                 std::uint32_t m, std::uint64_t seed, int n_threads = 0);

/// CSV with header: stratum,is_case,<effect names in catalog order>.
void write_design_csv(const DesignMatrix& dm, std::ostream& out);

/// Sidecar metadata JSON (m, seed, catalog, counts).
std::string design_meta_json(const DesignMatrix& dm);

/// Reads a design CSV produced by write_design_csv (strata must be
/// contiguous; row order within a stratum is free).
DesignMatrix read_design_csv(std::istream& in);

}  // namespace threm
