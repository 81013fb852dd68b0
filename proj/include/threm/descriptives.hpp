#pragma once

#include <iosfwd>
#include <vector>

#include "threm/event.hpp"

namespace threm {

/// One row of the per-period summary (Table-1 style descriptives).
struct DescriptiveRow {
    double period = 0.0;  // distinct timestamp; ignored when overall
    bool overall = false;
    std::size_t n = 0;
    double auth_mean = 0, auth_med = 0;
    std::size_t auth_max = 0;
    double key_mean = 0, key_med = 0;
    std::size_t key_max = 0;
    double key_cov = 0;  // % of events with non-empty keywords
    double ref_mean = 0, ref_med = 0;
    std::size_t ref_max = 0;
    double ref_cov = 0;
};

/// Per distinct timestamp plus one overall row (last). Errors on an empty
/// sequence.
std::vector<DescriptiveRow> descriptives(const EventSequence& seq);

/// CSV with header
/// period,n,auth_mean,auth_med,auth_max,key_mean,key_med,key_max,key_cov,ref_mean,ref_med,ref_max,ref_cov
void write_descriptives_csv(const std::vector<DescriptiveRow>& rows, std::ostream& out);

}  // namespace threm
